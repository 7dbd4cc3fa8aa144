import random
from fractions import Fraction

import pytest
import sympy
from sympy import QQ

from solvcoh.errors import ZeroPolynomialError
from solvcoh.exact import (Matrix, char_poly, min_poly, count_real_roots, isolate_real_roots,
                           cyclotomic_field, stem_field_roots, to_rational, format_rational,
                           nilpotent_exp, poly_at_matrix, sturm_isolate)
from solvcoh.solvmanifolds import jordan_chevalley

x = sympy.Symbol("x")


@pytest.mark.parametrize("value", ["3/6", " 1 / 2 ", Fraction(2, 4), sympy.Rational(1, 2), QQ(1, 2)])
def test_to_rational(value):
    assert to_rational(value) == QQ(1, 2)


def test_to_rational_refuses_floats():
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(ValueError):
        to_rational("0.5")
    with pytest.raises(ZeroDivisionError):
        to_rational("1/0")


def test_format_rational():
    assert format_rational(QQ(-3, 6)) == "-1/2"
    assert format_rational(QQ(4)) == "4"


def test_rank_and_nullspace():
    m = Matrix([[1, 2], [2, 4]])
    assert m.rank() == 1
    kernel = m.nullspace()
    assert len(kernel) == 1
    assert not any(m.apply(kernel[0]))


def test_solve():
    m = Matrix([[1, 1], [0, 1]])
    assert m.solve((QQ(3), QQ(1))) == (QQ(2), QQ(1))
    assert Matrix([[1, 2], [2, 4]]).solve((QQ(1), QQ(0))) is None


def test_inverse_and_powers():
    m = Matrix([[2, 1], [1, 1]])
    assert m * m.inverse() == Matrix.identity(2)
    assert m ** 0 == Matrix.identity(2)
    assert (m ** 2) == m * m


def test_char_and_min_poly():
    rotation = Matrix([[0, -1], [1, 0]])
    assert char_poly(rotation) == sympy.Poly(x ** 2 + 1, x, domain=QQ)
    assert min_poly(Matrix.identity(3)) == sympy.Poly(x - 1, x, domain=QQ)
    assert min_poly(Matrix([[1, 1], [0, 1]])) == sympy.Poly((x - 1) ** 2, x, domain=QQ)


def test_jordan_chevalley():
    a = Matrix([[1, 1], [0, 1]])
    s, n = jordan_chevalley(a)
    assert s == Matrix.identity(2)
    assert n == Matrix([[0, 1], [0, 0]])
    assert s * n == n * s


def test_nilpotent_exp():
    n = Matrix([[0, 1], [0, 0]])
    assert nilpotent_exp(n) == Matrix([[1, 1], [0, 1]])


def test_cyclotomic_values():
    field = cyclotomic_field(24)
    assert field.cos_pi(QQ(1, 3)) == QQ(1, 2)
    assert field.sin_pi(QQ(1, 2)) == 1
    assert field.cos_pi(QQ(1)) == -1
    half = field.cos_pi(QQ(1, 4))
    assert not half.is_rational()
    assert half * half == QQ(1, 2)


def test_stem_field_roots_of_cyclic_cubic():
    poly = x ** 3 - 6 * x ** 2 + 5 * x - 1
    field, roots = stem_field_roots(poly)
    assert len(roots) == 3
    for root in roots:
        assert root ** 3 - 6 * root ** 2 + 5 * root - 1 == 0


def test_real_root_counting():
    assert count_real_roots(x ** 3 - 2 * x) == 3
    assert count_real_roots(x ** 2 + 1) == 0
    assert count_real_roots(x ** 2 - 2, 0, 2) == 1
    intervals = isolate_real_roots(x ** 2 - 2)
    assert len(intervals) == 2
    (a, b), (c, d) = intervals
    assert b <= c
    assert a < 0 < d


def test_zero_polynomial():
    with pytest.raises(ZeroPolynomialError):
        isolate_real_roots(sympy.Poly(0, x))


def _random_matrices(count, seed=0):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 4)
        yield Matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])


def test_cayley_hamilton():
    for m in _random_matrices(40):
        assert poly_at_matrix(char_poly(m), m).is_zero()
        assert poly_at_matrix(min_poly(m), m).is_zero()


def test_min_poly_divides_char_poly():
    for m in _random_matrices(40, seed=1):
        cp, mp = char_poly(m), min_poly(m)
        assert cp.rem(mp).is_zero
        assert cp.sqf_part().rem(mp.sqf_part()).is_zero
        assert mp.rem(cp.sqf_part()).is_zero


def test_isolated_roots_of_random_cubics():
    rng = random.Random(7)
    eps = QQ(1, 10 ** 9)
    for _ in range(100):
        coeffs = [rng.choice([-1, 1]) * rng.randint(1, 5)] + [rng.randint(-9, 9) for _ in range(3)]
        poly = sympy.Poly(coeffs, x, domain=QQ)
        roots = []
        for root in sympy.real_roots(poly):
            if not roots or root != roots[-1]:
                roots.append(root)
        intervals = isolate_real_roots(poly)
        assert len(intervals) == len(roots)
        for (a, b), root in zip(intervals, roots):
            while b - a > eps:
                m = (a + b) / 2
                if count_real_roots(poly, a, m):
                    b = m
                else:
                    a = m
            assert abs(float(b) - float(root.evalf(30))) < 1e-9


@pytest.mark.parametrize("poly, constraints, satisfiable", [
    (x ** 3 - 5 * x ** 2 + 6 * x - 1, [(x, ">"), (x - 1, "<")], True),
    (x ** 3 - 5 * x ** 2 + 6 * x - 1, [(x - 4, ">")], False),
    (x ** 2 + 1, [], False),
    (x ** 2 - 2, [(x - 1, ">"), (x - 2, "<")], True),
    (x ** 2 - 2, [(x, ">="), (x ** 2 - 1, "<=")], False),
])
def test_sturm_isolate(poly, constraints, satisfiable):
    report = sturm_isolate(poly, constraints)
    assert report.satisfiable is satisfiable
    assert bool(report.intervals) is satisfiable


def test_sturm_isolate_rejects_unknown_relations():
    with pytest.raises(ValueError):
        sturm_isolate(x ** 2 - 2, [(x, "=>")])
