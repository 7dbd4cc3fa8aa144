"""
Number fields Q[x]/(m(x)).

Elements are dense polynomials in the generator reduced modulo the field's modulus,
with coefficients in ``QQ``.  Arithmetic runs on sympy's low-level ``dup_*`` routines.
"""
import logging

import sympy
from sympy.polys.densearith import dup_add, dup_sub, dup_mul, dup_neg, dup_rem, dup_mul_ground
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_invert

from ..errors import UnsupportedAngleError, UnsupportedFieldError, ZeroDenominatorError
from .rational import to_rational, format_rational, to_sympy

logger = logging.getLogger(__name__)

x = sympy.Symbol("x")


class NumberField:
    """
    The field Q[x]/(modulus).

    ``embedding`` is a sympy number naming the root of the modulus that ``x`` stands for;
    it is only used to print and to approximate elements.
    """

    def __init__(self, modulus, name, embedding=None):
        modulus = sympy.Poly(modulus, x, domain=QQ).monic()
        if modulus.degree() < 1:
            raise UnsupportedFieldError("modulus must have positive degree")
        if not modulus.is_irreducible:
            raise UnsupportedFieldError("modulus {} is reducible over Q".format(modulus.as_expr()))
        self.modulus = modulus
        self.name = name
        self.embedding = embedding
        self.degree = modulus.degree()
        self._mod_rep = [QQ.convert(c) for c in modulus.all_coeffs()]
        self.zero = NumberFieldElement(self, [])
        self.one = NumberFieldElement(self, [QQ.one])
        self.gen = NumberFieldElement(self, [QQ.one, QQ.zero])

    def __repr__(self):
        return "NumberField({}, {})".format(self.name, self.modulus.as_expr())

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("NumberField", tuple(self._mod_rep)))

    def convert(self, value):
        if isinstance(value, NumberFieldElement):
            if value.field != self:
                raise UnsupportedFieldError("cannot mix {} and {}".format(value.field.name, self.name))
            return value
        return NumberFieldElement(self, [to_rational(value)])

    def from_coords(self, coords):
        """Element with the given coordinates in the power basis 1, x, x², ..."""
        coords = [to_rational(c) for c in coords]
        return NumberFieldElement(self, list(reversed(coords)))

    def reduce(self, rep):
        return dup_rem(dup_strip(rep), self._mod_rep, QQ)


class NumberFieldElement:
    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        rep = dup_strip(list(rep))
        if len(rep) > field.degree:
            rep = field.reduce(rep)
        self.rep = tuple(rep)

    @property
    def coords(self):
        """Coordinates in the power basis, lowest degree first, padded to the field degree."""
        low_first = list(reversed(self.rep))
        return tuple(low_first + [QQ.zero] * (self.field.degree - len(low_first)))

    def _coerce(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise UnsupportedFieldError(
                    "cannot mix {} and {}".format(self.field.name, other.field.name))
            return other
        try:
            return NumberFieldElement(self.field, [to_rational(other)])
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NumberFieldElement(self.field, dup_add(list(self.rep), list(other.rep), QQ))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NumberFieldElement(self.field, dup_sub(list(self.rep), list(other.rep), QQ))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return NumberFieldElement(self.field, dup_neg(list(self.rep), QQ))

    def __mul__(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise UnsupportedFieldError(
                    "cannot mix {} and {}".format(self.field.name, other.field.name))
            product = dup_mul(list(self.rep), list(other.rep), QQ)
            return NumberFieldElement(self.field, self.field.reduce(product))
        try:
            c = to_rational(other)
        except (TypeError, ValueError):
            return NotImplemented
        return NumberFieldElement(self.field, dup_mul_ground(list(self.rep), c, QQ))

    __rmul__ = __mul__

    def inverse(self):
        if not self.rep:
            raise ZeroDenominatorError("division by zero in {}".format(self.field.name))
        return NumberFieldElement(self.field, dup_invert(list(self.rep), self.field._mod_rep, QQ))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        if len(self.rep) <= 1:
            return hash(self.rep[0] if self.rep else QQ.zero)
        return hash((self.field, self.rep))

    def __bool__(self):
        return bool(self.rep)

    def is_rational(self):
        return len(self.rep) <= 1

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("{} is not rational".format(self))
        return self.rep[0] if self.rep else QQ.zero

    def as_expr(self):
        gen = sympy.Symbol(self.field.name)
        return sum((to_sympy(c) * gen ** i for i, c in enumerate(self.coords)), sympy.Integer(0))

    def evalf(self, digits=15):
        if self.field.embedding is None:
            raise UnsupportedFieldError("{} has no embedding".format(self.field.name))
        value = sum((to_sympy(c) * self.field.embedding ** i for i, c in enumerate(self.coords)),
                    sympy.Integer(0))
        return sympy.N(value, digits)

    def __str__(self):
        if self.is_rational():
            return format_rational(self.to_rational())
        return str(self.as_expr())

    __repr__ = __str__


class CyclotomicField(NumberField):
    """
    Q(ζ) with ζ = exp(2πi/order).

    cos(qπ) and sin(qπ) lie in the field whenever q·order/2 is an integer and 4 divides
    the order.
    """

    def __init__(self, order=24):
        if order % 4:
            raise UnsupportedFieldError("cyclotomic order must be divisible by 4")
        super().__init__(sympy.cyclotomic_poly(order, x), "zeta{}".format(order),
                         sympy.exp(2 * sympy.pi * sympy.I / order))
        self.order = order
        self.i = self.zeta_power(order // 4)

    def zeta_power(self, j):
        return self.gen ** (j % self.order)

    def _angle_index(self, q):
        q = to_rational(q)
        j = q * self.order / 2
        if j.denominator != 1:
            raise UnsupportedAngleError(
                "angle {}·π is not a multiple of 2π/{}".format(format_rational(q), self.order))
        return int(j.numerator)

    def cos_pi(self, q):
        j = self._angle_index(q)
        return (self.zeta_power(j) + self.zeta_power(-j)) * QQ(1, 2)

    def sin_pi(self, q):
        j = self._angle_index(q)
        return -self.i * (self.zeta_power(j) - self.zeta_power(-j)) * QQ(1, 2)


def cyclotomic_field(order=24):
    return CyclotomicField(order)


def stem_field(poly, name="theta"):
    """The stem field Q[t]/(poly) of an irreducible polynomial, embedded at its largest real root."""
    poly = sympy.Poly(poly, x, domain=QQ)
    real_roots = poly.real_roots()
    embedding = real_roots[-1] if real_roots else sympy.CRootOf(poly.as_expr(), 0)
    return NumberField(poly, name, embedding)


def stem_field_roots(poly, name="theta"):
    """
    All roots of ``poly`` as elements of its stem field.

    Supported when ``poly`` splits in its stem field in the cheap cases: degree at most two,
    or a cubic whose discriminant is a rational square.  Returns ``(field, roots)`` with the
    generator first.
    """
    poly = sympy.Poly(poly, x, domain=QQ).monic()
    n = poly.degree()
    if n < 1:
        raise UnsupportedFieldError("constant polynomial has no roots")
    if n == 1:
        return QQ, [-to_rational(poly.all_coeffs()[1])]
    field = stem_field(poly, name)
    theta = field.gen
    coeffs = [to_rational(c) for c in poly.all_coeffs()]
    e1 = -coeffs[1]
    if n == 2:
        return field, [theta, field.convert(e1) - theta]
    if n == 3:
        disc = to_rational(poly.discriminant())
        delta = sympy.sqrt(to_sympy(disc))
        if not delta.is_Rational:
            raise UnsupportedFieldError(
                "cubic {} does not split in its stem field".format(poly.as_expr()))
        derivative = field.zero
        for k, c in enumerate(reversed(poly.diff(x).all_coeffs())):
            derivative = derivative + theta ** k * to_rational(c)
        half = QQ(1, 2)
        shift = derivative.inverse() * to_rational(delta)
        rest = field.convert(e1) - theta
        return field, [theta, (rest + shift) * half, (rest - shift) * half]
    raise UnsupportedFieldError("stem field roots are only computed for degree at most 3")


def field_of(values):
    """The common field of a collection of scalars: a NumberField or ``QQ``."""
    found = None
    for value in values:
        if isinstance(value, NumberFieldElement):
            if found is not None and found != value.field:
                raise UnsupportedFieldError(
                    "entries from {} and {} cannot be combined".format(found.name, value.field.name))
            found = value.field
    return found if found is not None else QQ
