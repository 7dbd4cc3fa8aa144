import pytest
from sympy import QQ

from solvcoh.errors import ModelError, UndefinedMasseyProductError
from solvcoh.cohomology import CEAlgebra, CohomologyRing, cohomology
from solvcoh.homotopy import (FORMAL, NOT_FORMAL, compare_with_reference, formality_verdict, free_cdga,
                              massey_scan, massey_triple, minimal_model, oprea_tralle_model,
                              reference_models, tbar_label, umodule)
from solvcoh.lie import catalog_build
from solvcoh.solvmanifolds import FiniteAction, invariant_cdga, presentation


def test_free_cdga_cohomology():
    free = free_cdga("x:2, b:3", {"b": "x^2"}, cap=7)
    assert free.generator_counts() == {2: 1, 3: 1}
    ring = CohomologyRing(free)
    assert ring.betti(2) == 1
    assert ring.betti(3) == 0
    assert ring.betti(4) == 0


def test_minimal_model_of_a_torus(abelian3):
    model = minimal_model(CEAlgebra(abelian3), cap=4)
    assert model.generator_counts() == {1: 3}
    assert model.verify()
    assert formality_verdict(model).verdict == FORMAL


def test_minimal_model_cap():
    with pytest.raises(ModelError):
        minimal_model(CEAlgebra(catalog_build("g3.5+R3")), cap=0)


def test_heisenberg_is_not_formal(heisenberg):
    model = minimal_model(CEAlgebra(heisenberg), cap=4)
    assert model.generator_counts()[1] == 3
    assert model.verify()
    verdict = formality_verdict(model)
    assert verdict.verdict == NOT_FORMAL
    assert verdict.method == "massey"
    assert verdict.massey
    assert verdict.witness


def test_massey_product_in_heisenberg(heisenberg):
    ring = cohomology(heisenberg)
    a, b = (1, ring.basis_class(1, 0)), (1, ring.basis_class(1, 1))
    triple = massey_triple(ring, a, a, b)
    assert triple.degree == 2
    assert not triple.vanishes
    assert massey_scan(ring, max_degree=1, first=True)


def test_undefined_massey_product(g35):
    ring = cohomology(g35)
    classes = [(1, ring.basis_class(1, i)) for i in range(ring.betti(1))]
    pairs = [(u, v) for u in classes for v in classes if any(ring.cup(1, u[1], 1, v[1]))]
    u, v = pairs[0]
    with pytest.raises(UndefinedMasseyProductError):
        massey_triple(ring, u, v, u)


def test_massey_products_vanish_on_formal_algebras(g35):
    assert massey_scan(cohomology(g35), max_degree=1) == []


@pytest.mark.parametrize("q, counts", [
    (QQ(2), {1: 6}),
    (QQ(1, 3), {1: 4, 2: 1, 3: 1}),
])
def test_model_of_g35_quotients(g35, q, counts):
    action = FiniteAction.from_monodromy(g35, q)
    model = minimal_model(invariant_cdga(action), cap=7)
    assert model.generator_counts() == counts
    assert model.verify()
    assert formality_verdict(model).verdict == FORMAL
    for reference in reference_models("g3.5+R3", tbar_label(q)):
        assert compare_with_reference(reference, model).agrees


def test_tbar_labels():
    assert tbar_label(2) == "2pi"
    assert tbar_label(QQ(1)) == "pi"
    assert tbar_label(QQ(1, 2)) == "pi/2"
    assert tbar_label(QQ(1, 3)) == "other"


def test_reference_presentations_are_consistent():
    for reference in reference_models():
        free = reference.build(7)
        assert free.generator_counts()


def test_umodule_of_g68():
    umod = umodule(presentation(catalog_build("g6.8", {"p": 0})), 2)
    assert umod.dimension(0) == 1
    assert umod.dimension(1) == 2
    assert sorted(umod.describe(1)) == ["a4", "a5"]


def test_umodule_of_rotation(g35):
    umod = umodule(presentation(g35), QQ(1, 2))
    # alpha^1, alpha^2 turn by a quarter; the three remaining forms are fixed
    assert umod.dimensions()[:3] == [1, 3, 4]


def test_oprea_tralle_model_matches_invariant_forms(g35):
    assembled = oprea_tralle_model(presentation(g35), QQ(1, 3), cap=7)
    assert assembled.consistent
    assert assembled.model.generator_counts() == {1: 4, 2: 1, 3: 1}


@pytest.mark.parametrize("seed", range(5))
def test_massey_verdicts_do_not_depend_on_the_seed(heisenberg, g35, seed):
    assert massey_scan(cohomology(heisenberg), max_degree=1, first=True, seed=seed)
    assert massey_scan(cohomology(g35), max_degree=1, seed=seed) == []
    heisenberg_ring = cohomology(heisenberg)
    a, b = (1, heisenberg_ring.basis_class(1, 0)), (1, heisenberg_ring.basis_class(1, 1))
    assert not massey_triple(heisenberg_ring, a, a, b, seed=seed).vanishes


@pytest.mark.parametrize("name", ["g6.10", "g5.14+R", "g5.18+R"])
def test_massey_witness_on_full_turn_quotients(name):
    action = FiniteAction.from_monodromy(catalog_build(name), QQ(2))
    ring = CohomologyRing(invariant_cdga(action))
    found = massey_scan(ring, max_degree=1, first=True, seed=0)
    assert found
    triple = found[0]
    assert triple.degree == 2
    assert not triple.vanishes
