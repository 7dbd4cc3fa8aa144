import pytest
from sympy import QQ

from solvcoh.errors import ActionError
from solvcoh.cohomology import CEAlgebra, CohomologyRing, cohomology
from solvcoh.exact import Matrix
from solvcoh.lie import catalog_build
from solvcoh.solvmanifolds import (FiniteAction, FixedClasses, actions, fixed_classes, invariant_cdga,
                                   invariant_cohomology)


@pytest.mark.parametrize("q, order", [(QQ(2), 1), (QQ(1), 2), (QQ(1, 2), 4), (QQ(1, 3), 6)])
def test_deck_action_order(g518, q, order):
    assert FiniteAction.from_monodromy(g518, q).order == order


@pytest.mark.parametrize("q, betti", [
    (QQ(2), [1, 4, 9, 12, 9, 4, 1]),
    (QQ(1), [1, 2, 5, 8, 5, 2, 1]),
    (QQ(1, 3), [1, 2, 3, 4, 3, 2, 1]),
])
def test_invariant_cohomology_of_g518(g518, q, betti):
    action = FiniteAction.from_monodromy(g518, q)
    assert invariant_cohomology(action).betti_numbers() == betti


@pytest.mark.parametrize("q, betti", [
    (QQ(2), [1, 6, 15, 20, 15, 6, 1]),
    (QQ(1, 2), [1, 4, 7, 8, 7, 4, 1]),
])
def test_invariant_cohomology_of_g35(g35, q, betti):
    action = FiniteAction.from_monodromy(g35, q)
    assert action.algebra.is_abelian()
    assert invariant_cohomology(action).betti_numbers() == betti


def test_averaging_is_a_projector(g518):
    action = FiniteAction.from_monodromy(g518, QQ(1, 3))
    for p in range(3):
        projector = action.averaging(p)
        assert projector * projector == projector


def test_invariant_forms_are_a_subalgebra(g35):
    action = FiniteAction.from_monodromy(g35, QQ(1, 2))
    sub = invariant_cdga(action)
    # alpha^1, alpha^2 rotate; alpha^3.. alpha^6 are fixed
    assert sub.dimension(1) == 4
    assert sub.dimension(2) == 7


def test_fixed_classes_match_invariant_cohomology(g518):
    action = FiniteAction.from_monodromy(g518, QQ(1))
    ring = CohomologyRing(CEAlgebra(action.algebra))
    invariant = invariant_cohomology(action, ring)
    for p in range(7):
        assert fixed_classes(action, ring, p).dimension == invariant.betti(p)


def test_identity_action(g518):
    action = FiniteAction.identity(g518)
    assert action.order == 1
    assert invariant_cohomology(action).betti_numbers() == cohomology(g518).betti_numbers()


def test_action_must_commute_with_d(heisenberg):
    swap = Matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    with pytest.raises(ActionError):
        FiniteAction(heisenberg, swap)


def test_action_shape(heisenberg):
    with pytest.raises(ActionError):
        FiniteAction(heisenberg, Matrix.identity(2))


def test_invariant_cohomology_of_modified_g68():
    action = FiniteAction.from_monodromy(catalog_build("g6.8", {"p": 0}), QQ(1, 2))
    assert action.order == 4
    ring = CohomologyRing(CEAlgebra(action.algebra))
    assert ring.betti(1) == 3
    invariant = invariant_cohomology(action, ring)
    assert invariant.betti(1) == 1
    (label,) = fixed_classes(action, ring, 1).labels
    assert "a6" in label
    assert "a4" not in label and "a5" not in label


def test_invariant_cohomology_rejects_inconsistent_fixed_classes(g518, monkeypatch):
    action = FiniteAction.from_monodromy(g518, QQ(1))
    real = actions.fixed_classes

    def one_short(act, ring, p):
        fixed = real(act, ring, p)
        if p == 1:
            return FixedClasses(p, fixed.coordinates[1:], fixed.labels[1:])
        return fixed

    monkeypatch.setattr(actions, "fixed_classes", one_short)
    with pytest.raises(ActionError):
        invariant_cohomology(action)
