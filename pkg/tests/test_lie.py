import pytest
from sympy import QQ

from solvcoh.errors import ConstraintError, JacobiError, PreconditionError, UnknownAlgebraError, DimensionError
from solvcoh.exact import Matrix
from solvcoh.lie import LieAlgebra, catalog_build, catalog_names


def test_catalog_names():
    names = catalog_names()
    for name in ("g6.8", "g6.10", "g6.11", "g5.14+R", "g5.17+R", "g5.18+R", "g3.5+R3"):
        assert name in names


@pytest.mark.parametrize("name", catalog_names())
def test_catalog_algebras_are_unimodular_almost_abelian(name):
    g = catalog_build(name)
    assert g.dim == 6
    assert g.is_solvable()
    assert g.is_unimodular()
    assert g.is_almost_abelian()
    assert g.metadata["catalog"] == name


def test_acting_index(g518, g35, heisenberg):
    assert g518.acting_index() == 4
    assert g518.ideal_indices() == [0, 1, 2, 3, 5]
    assert g35.acting_index() == 2
    assert heisenberg.acting_index() == 1


def test_almost_abelian_matrix(g518):
    a = g518.almost_abelian_matrix()
    # columns hold [X_i, X_5]
    assert a.column(0) == (0, -1, 0, 0, 0)
    assert a.column(2) == (1, 0, 0, -1, 0)
    assert a.trace() == 0


def test_from_almost_abelian_round_trip(g518):
    a = g518.almost_abelian_matrix()
    rebuilt = LieAlgebra.from_almost_abelian(a)
    assert rebuilt.dim == 6
    assert rebuilt.almost_abelian_matrix() == a


def test_derived_default_parameter():
    g = catalog_build("g6.8")
    assert g.params["a"] == QQ(-4)
    assert g.metadata["transcendental"] == ["b", "c"]


def test_constraint_violation():
    with pytest.raises(ConstraintError) as info:
        catalog_build("g6.8", {"b": 1, "c": 3})
    assert "g6.8" in str(info.value)


def test_unknown_parameter():
    with pytest.raises(ConstraintError):
        catalog_build("g3.5+R3", {"z": 1})


def test_unknown_algebra():
    with pytest.raises(UnknownAlgebraError):
        catalog_build("g9.9")


def test_catalog_parameters():
    g = catalog_build("g5.17+R", {"p": 1, "r": 2})
    assert g.bracket(2, 4) == {2: QQ(-1), 3: QQ(-2)}


def test_jacobi_failure():
    with pytest.raises(JacobiError) as info:
        LieAlgebra(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
    assert info.value.triple == (1, 2, 3)


def test_antisymmetric_input():
    g = LieAlgebra(3, {(1, 0): {2: 1}})
    assert g.bracket(0, 1) == {2: QQ(-1)}


def test_dimension_range():
    with pytest.raises(DimensionError):
        LieAlgebra(2, {(0, 2): {0: 1}})


def test_series(heisenberg):
    assert heisenberg.is_nilpotent()
    assert heisenberg.derived_series() == [3, 1, 0]
    assert heisenberg.lower_central_series() == [3, 1, 0]


def test_not_solvable():
    so3 = LieAlgebra(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}}, name="so3")
    assert not so3.is_solvable()
    with pytest.raises(PreconditionError):
        so3.require_solvable()


def test_completely_solvable(g518):
    affine = LieAlgebra(2, {(0, 1): {0: 1}})
    assert affine.is_completely_solvable()
    assert not g518.is_completely_solvable()


def test_with_acting_matrix(g35):
    zero = Matrix.zeros(5, 5)
    assert g35.with_acting_matrix(zero).is_abelian()
