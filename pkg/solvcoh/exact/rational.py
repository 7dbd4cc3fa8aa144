"""
Rational scalars.

Rationals are the elements of sympy's ``QQ`` domain (gmpy2 ``mpq`` when available,
``PythonMPQ`` otherwise); this module only converts to and from them.
"""
import re
from fractions import Fraction
from functools import reduce
from math import gcd

import sympy
from sympy.polys.domains import QQ

_RATIONAL_LITERAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def to_rational(value):
    """
    Convert ``value`` to an element of ``QQ``.

    Accepts ints, QQ elements, ``fractions.Fraction``, sympy Rationals and string literals
    of the form ``p/q`` or ``p``.  Floats are refused.
    """
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, bool):
        raise TypeError("not a rational: {!r}".format(value))
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        match = _RATIONAL_LITERAL.match(value)
        if match is None:
            raise ValueError("not a rational literal: {!r}".format(value))
        den = int(match.group(2)) if match.group(2) else 1
        if den == 0:
            raise ZeroDivisionError("zero denominator in {!r}".format(value))
        return QQ(int(match.group(1)), den)
    if isinstance(value, sympy.Basic):
        if not value.is_Rational:
            raise ValueError("not a rational: {}".format(value))
        return QQ(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ(int(value.numerator), int(value.denominator))
    raise TypeError("not a rational: {!r}".format(value))


def is_integer(q):
    return q.denominator == 1


def numerator(q):
    return int(q.numerator)


def denominator(q):
    return int(q.denominator)


def lcm_of_denominators(values):
    """Least common multiple of the denominators of ``values`` (1 for an empty sequence)."""
    return reduce(lambda a, b: a * b // gcd(a, b), (denominator(v) for v in values), 1)


def format_rational(q):
    q = to_rational(q)
    if is_integer(q):
        return str(numerator(q))
    return "{}/{}".format(numerator(q), denominator(q))


def to_sympy(q):
    return sympy.Rational(numerator(q), denominator(q))


def to_integer(q):
    if not is_integer(q):
        raise ValueError("{} is not an integer".format(format_rational(q)))
    return numerator(q)
