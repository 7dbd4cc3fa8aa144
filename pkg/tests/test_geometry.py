import pytest

from solvcoh.errors import DimensionError
from solvcoh.cohomology import ExteriorForm, cohomology
from solvcoh.lie import LieAlgebra, catalog_build
from solvcoh.geometry import (SU3Candidate, closed_two_forms, generic_lefschetz, half_flat_verify,
                              lefschetz_degree, pfaffian, standard_candidate, symplectic_exists)
from solvcoh.geometry import lefschetz
from solvcoh.geometry.lefschetz import LefschetzDegree, LefschetzReport
from solvcoh.solvmanifolds import modify


def test_pfaffian():
    assert pfaffian([]) == 1
    assert pfaffian([[0, 1], [-1, 0]]) == 1
    standard = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    assert pfaffian(standard) == 1
    assert pfaffian([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]]) == 0


@pytest.mark.parametrize("name, params, exists", [
    ("g6.8", {"p": 0}, False),
    ("g6.10", {"a": 0}, True),
    ("g6.11", {"p": 0}, False),
    ("g5.14+R", {}, True),
    ("g5.18+R", {}, True),
    ("g3.5+R3", {}, True),
])
def test_symplectic_exists(name, params, exists):
    report = symplectic_exists(catalog_build(name, params))
    assert report.exists == exists
    if exists:
        assert report.sample is not None
        assert report.family.pfaffian_at(report.sample) != 0
    else:
        assert report.family.pfaffian == 0


def test_abelian_family():
    family = closed_two_forms(LieAlgebra(4))
    assert len(family.basis) == 6
    assert family.pfaffian != 0


def test_odd_dimension(heisenberg):
    with pytest.raises(DimensionError):
        closed_two_forms(heisenberg)


def test_hard_lefschetz_on_the_torus():
    ring = cohomology(LieAlgebra(6))
    report, family = generic_lefschetz(ring)
    assert report.hard
    assert report.lefschetz_degree() == 2


def test_lefschetz_fails_on_modified_g610(g610):
    report, family = generic_lefschetz(cohomology(modify(g610)))
    assert report.top_class
    assert report.degrees[0].isomorphism
    assert not report.hard


def test_lefschetz_of_a_given_form(g35):
    ring = cohomology(g35)
    omega = ring.algebra.vector(ExteriorForm.parse("a12 + a34 + a56"))
    report = lefschetz_degree(ring, omega)
    assert report.top_class
    assert report.degrees[0].isomorphism


def test_half_flat_on_the_torus():
    report = half_flat_verify(LieAlgebra(6), standard_candidate())
    assert report.half_flat
    assert report.symplectic_half_flat
    assert not report.failed()


def test_half_flat_reports_failed_checks():
    candidate = SU3Candidate.parse("a12 + a34", "a135", "a136")
    report = half_flat_verify(LieAlgebra(6), candidate)
    assert not report.half_flat
    assert "omega nondegenerate" in report.failed()


def test_half_flat_needs_dimension_six():
    with pytest.raises(DimensionError):
        half_flat_verify(LieAlgebra(4), standard_candidate())


def test_invariant_symplectic_condition_of_g610(g610):
    report = symplectic_exists(g610)
    assert "w1_6*w2_3*w4_5" in str(report.condition)
    assert len(report.family.symbols) == 7


@pytest.mark.parametrize("name", ["g5.14+R", "g5.18+R", "g6.10"])
def test_modified_algebras_are_only_zero_lefschetz(name):
    report, family = generic_lefschetz(cohomology(modify(catalog_build(name))))
    assert report.top_class
    assert [d.isomorphism for d in report.degrees] == [True, False, False]
    assert report.lefschetz_degree() == 0


def test_hard_lefschetz_on_modified_g517():
    report, family = generic_lefschetz(cohomology(modify(catalog_build("g5.17+R", {"p": 1, "r": 2}))))
    assert report.hard
    assert report.lefschetz_degree() == 2


def test_generic_rank_needs_the_top_class(monkeypatch):
    def degenerate(ring, omega, s=None):
        return LefschetzReport([LefschetzDegree(k, 0, 1, 1, False, True) for k in range(3)], 2, False)

    monkeypatch.setattr(lefschetz, "lefschetz_degree", degenerate)
    monkeypatch.setattr(lefschetz, "_symbolic_rank", lambda ring, family, k: 1)
    report, family = generic_lefschetz(cohomology(LieAlgebra(6)), samples=2)
    assert [d.rank for d in report.degrees] == [1, 1, 1]
    assert not any(d.isomorphism for d in report.degrees)
    assert report.lefschetz_degree() == -1
