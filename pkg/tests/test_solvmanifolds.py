import pytest
from sympy import QQ

import sympy

from solvcoh.errors import PreconditionError, TranscendentalEntryError
from solvcoh.exact import Matrix, RationalFunctionField, symbolic_char_coeffs
from solvcoh.lie import LieAlgebra, catalog_build
from solvcoh.solvmanifolds import (NECESSARY_FAIL, NECESSARY_PASS, VERIFIED, eigenvalue_layer_check,
                                   lattice_candidate, lattice_integrality, lattice_system_check, modify,
                                   monodromy, mostow_test, presentation, verify_witness, exponentials_from_roots,
                                   symbolic_integrality, symbolic_monodromy)


def test_presentation_parts(g518):
    pres = presentation(g518)
    assert pres.acting == 4
    assert pres.n == 5
    assert pres.S + pres.N == pres.A
    assert pres.S * pres.N == pres.N * pres.S
    assert not pres.N.is_zero()
    assert [f.value for f in pres.frequencies] == [1]
    assert not pres.is_completely_solvable()


def test_presentation_needs_almost_abelian():
    so3 = LieAlgebra(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})
    with pytest.raises(PreconditionError):
        presentation(so3)


@pytest.mark.parametrize("name, params", [
    ("g6.8", {"p": 0}),
    ("g6.10", {"a": 0}),
    ("g5.14+R", {}),
    ("g5.17+R", {"p": 0, "r": 2}),
    ("g5.18+R", {}),
    ("g3.5+R3", {}),
])
@pytest.mark.parametrize("q", [QQ(2), QQ(1), QQ(1, 2), QQ(1, 3)])
def test_mostow_fails_for_rotating_algebras(name, params, q):
    report = mostow_test(presentation(catalog_build(name, params)), q)
    assert not report.holds
    assert report.witness is not None


def test_mostow_holds_for_completely_solvable():
    affine = LieAlgebra(6, {(0, 1): {0: 1}})
    assert mostow_test(presentation(affine), 2).holds


def test_mostow_with_irrational_frequency():
    g = catalog_build("g6.11", {"p": 0})
    # the X2, X3 block has frequency 1, the declared irrational s only adds an independent axis
    assert not mostow_test(presentation(g), 2).holds


def test_modify_removes_rotations(g518, g35):
    modified = modify(g518)
    assert presentation(modified).is_completely_solvable()
    assert modify(modified) == modified
    assert modify(g35).is_abelian()
    assert modify(catalog_build("g5.17+R", {"p": 0, "r": 1})).is_abelian()
    assert not modify(catalog_build("g5.17+R", {"p": 1, "r": 1})).is_abelian()


def test_modify_keeps_irrational_blocks_unless_full():
    g = catalog_build("g6.11", {"p": 0})
    kept = modify(g)
    assert not presentation(kept).is_completely_solvable()
    assert presentation(modify(g, full=True)).is_completely_solvable()


def test_monodromy_of_rotation(g35):
    pres = presentation(g35)
    assert monodromy(pres, 2) == Matrix.identity(5)
    half_turn = monodromy(pres, 1)
    assert half_turn == Matrix.diagonal([-1, -1, 1, 1, 1])


def test_monodromy_needs_exact_exponentials():
    pres = presentation(catalog_build("g6.8", {"p": 0}))
    with pytest.raises(TranscendentalEntryError):
        monodromy(pres, 2)


@pytest.mark.parametrize("q", [QQ(2), QQ(1), QQ(1, 2)])
def test_lattice_integrality_verified(g35, q):
    report = lattice_integrality(lattice_candidate(presentation(g35), q))
    assert report.verdict == VERIFIED
    integer, conjugation = report.witness
    assert integer.is_integral()
    assert verify_witness(lattice_candidate(presentation(g35), q).matrix, report.witness)


def test_lattice_integrality_rejects_rational_non_integral():
    m = Matrix([[2, 0], [0, QQ(1, 2)]])
    report = lattice_integrality(m)
    assert report.verdict == NECESSARY_FAIL
    assert "not integral" in report.reason


def test_lattice_integrality_witness_for_hyperbolic_matrix():
    m = Matrix([[2, 1], [1, 1]])
    report = lattice_integrality(m)
    assert report.verified


def test_eigenvalue_layer_check():
    assert eigenvalue_layer_check(presentation(catalog_build("g5.18+R")), 2).verdict == NECESSARY_PASS
    assert eigenvalue_layer_check(presentation(catalog_build("g6.8", {"p": 0})), 2).verdict == NECESSARY_PASS
    failing = eigenvalue_layer_check(presentation(catalog_build("g6.10", {"a": 1})), 2)
    assert failing.verdict == NECESSARY_FAIL
    assert "summing to" in failing.reason


def test_eigenvalue_layer_check_determinant():
    affine = LieAlgebra(2, {(0, 1): {0: 1}})
    assert eigenvalue_layer_check(presentation(affine), 1).verdict == NECESSARY_FAIL


@pytest.mark.parametrize("h1, h2, satisfiable", [
    (5, 6, True),
    (0, 0, False),
    (3, 3, False),
])
def test_lattice_system_check(h1, h2, satisfiable):
    report = lattice_system_check(h1, h2)
    assert report.satisfiable == satisfiable
    assert report.cubic.degree() == 3
    assert bool(report.intervals) is satisfiable


def test_symbolic_char_coeffs_of_diagonal():
    w, v = sympy.symbols("w v")
    field = RationalFunctionField((w, v))
    coeffs = symbolic_char_coeffs(Matrix.diagonal([field.from_expr(w), field.from_expr(v)], field))
    assert coeffs[0].equals(w * v)
    assert coeffs[1].equals(-(w + v))
    assert coeffs[2] == field.one


def test_symbolic_monodromy_at_full_turn():
    w, v = sympy.symbols("w v")
    m = symbolic_monodromy(presentation(catalog_build("g6.8", {"p": 0})), {3: w, 1: v, -4: 1 / (w * v)}, 2)
    coeffs = symbolic_char_coeffs(m)
    assert coeffs[5] == m.field.one
    assert coeffs[4].equals("-2 - (r*s + 1)/s", {"r": w + v, "s": w * v})
    assert coeffs[0].equals(-1)


def test_symbolic_monodromy_open_angle():
    w, v = sympy.symbols("w v")
    m = symbolic_monodromy(presentation(catalog_build("g6.8", {"p": 0})), {3: w, 1: v, -4: 1 / (w * v)})
    coeffs = symbolic_char_coeffs(m)
    assert not coeffs[1].equals("u + (r + s**2)/s", {"r": w + v, "s": w * v})
    assert coeffs[1].equals("u + (r + s**2)/s", {"r": w + v, "s": w * v},
                            relations=("sigma**2 + u**2/4 - 1",))


def test_symbolic_integrality_necessary_pass():
    report = symbolic_integrality(presentation(catalog_build("g6.8", {"p": 0})), 2)
    assert report.verdict == NECESSARY_PASS
    assert "±1" in report.reason


@pytest.mark.parametrize("params, q", [
    ({}, 2),
    ({"p": 0, "s": QQ(1, 2)}, 4),
])
def test_symbolic_integrality_rejects_g611(params, q):
    report = symbolic_integrality(presentation(catalog_build("g6.11", params)), q)
    assert report.verdict == NECESSARY_FAIL
    assert "q = 0" in report.reason
    assert "violates Ne(a*s, 0)" in report.reason


def test_symbolic_integrality_needs_whole_turns():
    assert symbolic_integrality(presentation(catalog_build("g6.8", {"p": 0})), QQ(1, 2)) is None


def test_exponentials_from_roots():
    pres = presentation(catalog_build("g6.8", {"p": 0}))
    exponentials = exponentials_from_roots(pres, "x**3 - 6*x**2 + 5*x - 1")
    assert sorted(exponentials) == [-4, 1, 3]
    values = [exponentials[a].evalf() for a in (-4, 1, 3)]
    assert values == sorted(values)
    product = exponentials[-4] * exponentials[1] * exponentials[3]
    assert product.is_rational() and product.to_rational() == 1
    with pytest.raises(PreconditionError):
        exponentials_from_roots(pres, "x**2 - 3*x + 1")


def test_lattice_integrality_g68_companion_witness():
    pres = presentation(catalog_build("g6.8", {"p": 0}))
    exponentials = exponentials_from_roots(pres, "x**3 - 6*x**2 + 5*x - 1")
    candidate = lattice_candidate(pres, 2, exponentials)
    report = lattice_integrality(candidate)
    assert report.verdict == VERIFIED
    x = sympy.Symbol("x")
    assert report.char_poly.as_expr() == x**5 - 8*x**4 + 18*x**3 - 17*x**2 + 7*x - 1
    assert report.witness[0].is_integral()
    assert verify_witness(candidate.matrix, report.witness)


def test_lattice_integrality_g35_third_turn(g35):
    candidate = lattice_candidate(presentation(g35), QQ(2, 3))
    report = lattice_integrality(candidate)
    assert report.verdict == VERIFIED
    assert verify_witness(candidate.matrix, report.witness)
