"""
Real root isolation with Sturm sequences.

Roots are isolated in half-open intervals (a, b] with rational endpoints; the sign of
another polynomial at an isolated root is decided exactly, which is what constraint
satisfiability needs.
"""
import logging
from collections import namedtuple

import sympy
from sympy.polys.domains import QQ

from ..errors import ZeroPolynomialError
from .rational import to_rational

logger = logging.getLogger(__name__)

RELATIONS = {
    ">": lambda sign: sign > 0,
    ">=": lambda sign: sign >= 0,
    "<": lambda sign: sign < 0,
    "<=": lambda sign: sign <= 0,
    "==": lambda sign: sign == 0,
    "!=": lambda sign: sign != 0,
}


class RootIsolation(namedtuple("RootIsolation", ["satisfiable", "intervals", "polynomial"])):
    """
    Outcome of :func:`sturm_isolate`.

    ``intervals`` holds one isolating interval (a, b] per real root meeting every constraint.
    """


def _coeffs(poly):
    return [QQ.convert(c) for c in poly.all_coeffs()]


def _horner(coeffs, point):
    value = QQ.zero
    for c in coeffs:
        value = value * point + c
    return value


def _sign(value):
    return (value > 0) - (value < 0)


class _Chain:
    """A Sturm sequence of a squarefree polynomial with its coefficient lists cached."""

    def __init__(self, poly):
        self.poly = poly
        self.sequence = [_coeffs(p) for p in sympy.sturm(poly)]

    def variations(self, point):
        signs = [_sign(_horner(c, point)) for c in self.sequence]
        return _count_variations(signs)

    def variations_at_infinity(self, positive=True):
        signs = []
        for c in self.sequence:
            lead = _sign(c[0])
            if not positive and (len(c) - 1) % 2:
                lead = -lead
            signs.append(lead)
        return _count_variations(signs)

    def count(self, a, b):
        """Number of distinct real roots in (a, b]."""
        return self.variations(a) - self.variations(b)


def _count_variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _as_poly(poly, gen=None):
    if isinstance(poly, sympy.Poly):
        return poly.set_domain(QQ) if poly.get_domain() != QQ else poly
    expr = sympy.sympify(poly)
    if gen is None:
        free = sorted(expr.free_symbols, key=str)
        gen = free[0] if free else sympy.Symbol("x")
    return sympy.Poly(expr, gen, domain=QQ)


def cauchy_bound(poly):
    """1 + max |a_i/a_n|: every real root lies strictly inside (−bound, bound)."""
    coeffs = _coeffs(poly)
    lead = coeffs[0]
    return QQ.one + max((abs(c / lead) for c in coeffs[1:]), default=QQ.zero)


def isolate_real_roots(poly):
    """Disjoint isolating intervals (a, b] of the distinct real roots, in increasing order."""
    poly = _as_poly(poly)
    if poly.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no isolated roots")
    if poly.degree() < 1:
        return []
    poly = poly.sqf_part()
    chain = _Chain(poly)
    bound = cauchy_bound(poly)
    found = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = chain.count(a, b)
        if n == 0:
            continue
        if n == 1:
            found.append((a, b))
            continue
        m = (a + b) / 2
        stack.append((m, b))
        stack.append((a, m))
    return sorted(found)


def count_real_roots(poly, a=None, b=None):
    poly = _as_poly(poly)
    if poly.is_zero:
        raise ZeroPolynomialError("the zero polynomial has infinitely many roots")
    if poly.degree() < 1:
        return 0
    chain = _Chain(poly.sqf_part())
    low = chain.variations_at_infinity(False) if a is None else chain.variations(to_rational(a))
    high = chain.variations_at_infinity(True) if b is None else chain.variations(to_rational(b))
    return low - high


def sign_at_root(constraint, poly, interval):
    """
    Sign of ``constraint`` at the unique root of the squarefree ``poly`` in ``interval``.

    A common factor that vanishes inside the interval means the sign is 0; otherwise the
    interval is bisected until ``constraint`` has no root in it.
    """
    chain = _Chain(poly)
    a, b = interval
    common = poly.gcd(constraint)
    if common.degree() > 0 and _Chain(common.sqf_part()).count(a, b) == 1:
        return 0
    if constraint.degree() < 1:
        return _sign(_coeffs(constraint)[0]) if not constraint.is_zero else 0
    constraint_chain = _Chain(constraint.sqf_part())
    while constraint_chain.count(a, b):
        m = (a + b) / 2
        if chain.count(a, m) == 1:
            b = m
        else:
            a = m
    return _sign(_horner(_coeffs(constraint), b))


def sturm_isolate(poly, constraints=(), gen=None):
    """
    Decide whether ``poly`` has a real root meeting every constraint.

    ``constraints`` are ``(polynomial, relation)`` pairs in the same variable with relation one
    of ``>``, ``>=``, ``<``, ``<=``, ``==``, ``!=``; e.g. ``[(s, ">"), (s - 1, "<")]`` encodes
    0 < s < 1.  The squarefree part of ``poly`` is used.
    """
    poly = _as_poly(poly, gen)
    if poly.is_zero:
        raise ZeroPolynomialError("cannot isolate the roots of the zero polynomial")
    gen = poly.gens[0]
    parsed = []
    for expr, relation in constraints:
        if relation not in RELATIONS:
            raise ValueError("unknown relation {!r}".format(relation))
        parsed.append((_as_poly(expr, gen), relation))
    if poly.degree() < 1:
        return RootIsolation(False, [], poly)
    squarefree = poly.sqf_part()
    accepted = []
    for interval in isolate_real_roots(squarefree):
        if all(RELATIONS[relation](sign_at_root(constraint, squarefree, interval))
               for constraint, relation in parsed):
            accepted.append(interval)
    logger.debug("%s: %d admissible real roots", poly.as_expr(), len(accepted))
    return RootIsolation(bool(accepted), accepted, squarefree)
