"""
Rational functions over Q in a fixed set of symbols.

Used for matrix entries that depend on unevaluated quantities, e.g. the exponentials
w = e^{t̄b}, v = e^{t̄c} of a monodromy, or u = 2cos(t̄).
"""
import sympy
from sympy.polys.domains import QQ

from ..errors import DimensionError, ZeroDenominatorError
from .rational import to_rational


class RationalFunctionField:
    """The field Q(g_1, ..., g_m) for a fixed tuple of symbols."""

    def __init__(self, gens):
        if isinstance(gens, str):
            gens = sympy.symbols(gens)
        self.gens = tuple(sympy.Symbol(g) if isinstance(g, str) else g for g in gens)
        self.zero = SymbolicRationalFunction(self, self._poly(0))
        self.one = SymbolicRationalFunction(self, self._poly(1))

    def __repr__(self):
        return "QQ({})".format(", ".join(str(g) for g in self.gens))

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and self.gens == other.gens

    def __hash__(self):
        return hash(("RationalFunctionField", self.gens))

    def _poly(self, expr):
        return sympy.Poly(expr, *self.gens, domain=QQ)

    def symbol(self, name):
        """The generator called ``name`` as a field element."""
        gen = sympy.Symbol(name) if isinstance(name, str) else name
        return SymbolicRationalFunction(self, self._poly(gen))

    def convert(self, value):
        if isinstance(value, SymbolicRationalFunction):
            if value.field == self:
                return value
            return self.from_expr(value.as_expr())
        if isinstance(value, sympy.Basic):
            return self.from_expr(value)
        return SymbolicRationalFunction(self, self._poly(QQ.to_sympy(to_rational(value))))

    def from_expr(self, expr):
        """Parse a sympy expression (or string) that is a rational function of the generators."""
        expr = sympy.sympify(expr)
        num, den = sympy.fraction(sympy.together(expr))
        return SymbolicRationalFunction(self, self._poly(num), self._poly(den))


class SymbolicRationalFunction:
    """
    A quotient num/den of polynomials over Q.

    The pair is reduced by its gcd and the denominator is made monic, but equality never
    relies on that: it is decided by cross-multiplication.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=None):
        if den is None:
            den = field.one.num if hasattr(field, "one") else field._poly(1)
        if den.is_zero:
            raise ZeroDenominatorError("rational function with zero denominator")
        g = num.gcd(den)
        if not g.is_one and not g.is_zero:
            num = num.exquo(g)
            den = den.exquo(g)
        lc = den.LC()
        if lc != 1:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, SymbolicRationalFunction):
            return self.field.convert(other)
        try:
            return self.field.convert(other)
        except (TypeError, ValueError, sympy.PolynomialError):
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return SymbolicRationalFunction(self.field, self.num + other.num, self.den)
        return SymbolicRationalFunction(self.field, self.num * other.den + other.num * self.den,
                                        self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return SymbolicRationalFunction(self.field, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return SymbolicRationalFunction(self.field, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero:
            raise ZeroDenominatorError("division by an identically zero rational function")
        return SymbolicRationalFunction(self.field, self.den, self.num)

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
        return SymbolicRationalFunction(self.field, self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero

    def __hash__(self):
        return hash((self.num.as_expr(), self.den.as_expr()))

    def __bool__(self):
        return not self.num.is_zero

    def as_expr(self):
        return self.num.as_expr() / self.den.as_expr()

    def __str__(self):
        return str(self.as_expr())

    __repr__ = __str__

    def substitute(self, mapping, target=None):
        """
        Replace generators by expressions and return the result in ``target``.

        ``mapping`` sends symbols (or names) to sympy expressions, e.g. ``{"r": w + v}``.
        """
        target = target or self.field
        subs = {(sympy.Symbol(k) if isinstance(k, str) else k): sympy.sympify(v)
                for k, v in mapping.items()}
        num = self.num.as_expr().subs(subs, simultaneous=True)
        den = self.den.as_expr().subs(subs, simultaneous=True)
        den_value = target.from_expr(den)
        if not den_value:
            raise ZeroDenominatorError("substitution makes the denominator vanish")
        return target.from_expr(num) / den_value

    def equals(self, other, substitutions=None, relations=()):
        """
        Exact identity test against ``other``, a sympy expression, string or rational function.

        ``substitutions`` rewrite the symbols of ``other`` in terms of this function's generators
        (e.g. ``{"r": w + v, "s": w*v}``); ``relations`` are polynomials in the generators known
        to vanish, such as σ² + u²/4 − 1 for σ = sin t̄, u = 2cos t̄.
        """
        lhs = self
        expr = other.as_expr() if isinstance(other, SymbolicRationalFunction) else sympy.sympify(other)
        if substitutions:
            expr = expr.subs({(sympy.Symbol(k) if isinstance(k, str) else k): sympy.sympify(v)
                              for k, v in substitutions.items()}, simultaneous=True)
        rhs = lhs.field.from_expr(expr)
        difference = lhs.num * rhs.den - rhs.num * lhs.den
        if difference.is_zero:
            return True
        if not relations:
            return False
        basis = sympy.groebner([sympy.sympify(r) for r in relations], *lhs.field.gens, order="grevlex")
        _, remainder = sympy.reduced(difference.as_expr(), list(basis.exprs), *lhs.field.gens,
                                     order="grevlex")
        return sympy.expand(remainder) == 0


def symbolic_char_coeffs(matrix):
    """
    Characteristic polynomial coefficients of a matrix over a rational-function field.

    Returns ``coeffs`` with ``coeffs[i]`` the coefficient of x^i in det(xI − M), so
    ``coeffs[n]`` is 1.  The Berkowitz recurrence never divides.
    """
    from .matrices import Matrix, berkowitz

    if not isinstance(matrix, Matrix):
        raise TypeError("expected a Matrix")
    if not matrix.is_square:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    return list(reversed(berkowitz([list(r) for r in matrix.rows], matrix.field)))
