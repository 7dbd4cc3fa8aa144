"""
Dense exact matrices over QQ, number fields and rational-function fields.

Rational matrices are row reduced by fraction-free (Bareiss) elimination on integer-scaled
rows; every other field uses plain Gauss-Jordan.  Characteristic polynomials come from the
division-free Berkowitz recurrence, so they work over any commutative scalar ring.
"""
import logging
from math import factorial

import sympy
from sympy.polys.domains import QQ

from ..errors import DimensionError, UnsupportedFieldError
from .numberfield import NumberFieldElement, field_of
from .rational import to_rational, format_rational, lcm_of_denominators

logger = logging.getLogger(__name__)

x = sympy.Symbol("x")


def is_rational_field(field):
    return field == QQ


def convert_scalar(field, value):
    if is_rational_field(field):
        if isinstance(value, NumberFieldElement):
            return value.to_rational()
        return to_rational(value)
    return field.convert(value)


def scalar_is_rational(value):
    if isinstance(value, NumberFieldElement):
        return value.is_rational()
    return isinstance(value, QQ.dtype) or isinstance(value, int)


class Matrix:
    """
    Immutable rectangular matrix with entries in a single field.

    ``field`` is sympy's ``QQ`` or any object exposing ``zero``, ``one`` and ``convert``
    (``NumberField``, ``RationalFunctionField``).
    """

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, rows, field=None, ncols=None):
        rows = [list(r) for r in rows]
        if field is None:
            field = field_of(v for r in rows for v in r)
        self.field = field
        self.rows = tuple(tuple(convert_scalar(field, v) for v in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionError("ragged rows")

    @classmethod
    def zeros(cls, nrows, ncols, field=QQ):
        return cls([[field.zero] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def identity(cls, n, field=QQ):
        return cls([[field.one if i == j else field.zero for j in range(n)] for i in range(n)], field, n)

    @classmethod
    def diagonal(cls, values, field=QQ):
        n = len(values)
        return cls([[values[i] if i == j else field.zero for j in range(n)] for i in range(n)], field, n)

    @classmethod
    def from_columns(cls, columns, field=QQ, nrows=None):
        columns = [list(c) for c in columns]
        if not columns:
            return cls.zeros(nrows or 0, 0, field)
        return cls([list(r) for r in zip(*columns)], field, len(columns))

    @classmethod
    def block_diagonal(cls, blocks, field=QQ):
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = [[field.zero] * m for _ in range(n)]
        r0 = c0 = 0
        for block in blocks:
            for i in range(block.nrows):
                for j in range(block.ncols):
                    rows[r0 + i][c0 + j] = block.rows[i][j]
            r0 += block.nrows
            c0 += block.ncols
        return cls(rows, field, m)

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix(self.columns(), self.field, self.nrows)

    T = property(transpose)

    def convert(self, field):
        return Matrix(self.rows, field, self.ncols)

    def map(self, func, field=None):
        return Matrix([[func(v) for v in r] for r in self.rows], field or self.field, self.ncols)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError("shape mismatch {} vs {}".format(self.shape, other.shape))

    def _unify(self, other):
        if self.field == other.field:
            return self, other
        if is_rational_field(self.field):
            return self.convert(other.field), other
        if is_rational_field(other.field):
            return self, other.convert(self.field)
        raise UnsupportedFieldError("cannot combine matrices over {} and {}".format(self.field, other.field))

    def __add__(self, other):
        self._check_same_shape(other)
        a, b = self._unify(other)
        return Matrix([[u + v for u, v in zip(r, s)] for r, s in zip(a.rows, b.rows)], a.field, a.ncols)

    def __sub__(self, other):
        self._check_same_shape(other)
        a, b = self._unify(other)
        return Matrix([[u - v for u, v in zip(r, s)] for r, s in zip(a.rows, b.rows)], a.field, a.ncols)

    def __neg__(self):
        return Matrix([[-v for v in r] for r in self.rows], self.field, self.ncols)

    def scale(self, c):
        c = convert_scalar(self.field, c)
        return Matrix([[v * c for v in r] for r in self.rows], self.field, self.ncols)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise DimensionError("cannot multiply {} by {}".format(self.shape, other.shape))
        a, b = self._unify(other)
        zero = a.field.zero
        cols = b.columns()
        rows = []
        for r in a.rows:
            nz = [(k, v) for k, v in enumerate(r) if v]
            row = []
            for c in cols:
                s = zero
                for k, v in nz:
                    w = c[k]
                    if w:
                        s = s + v * w
                row.append(s)
            rows.append(row)
        return Matrix(rows, a.field, b.ncols)

    def apply(self, vector):
        """Matrix times column vector, returned as a tuple."""
        vector = [convert_scalar(self.field, v) for v in vector]
        zero = self.field.zero
        out = []
        for r in self.rows:
            s = zero
            for a, b in zip(r, vector):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def __pow__(self, n):
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Matrix.identity(self.nrows, self.field), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix) or self.shape != other.shape:
            return False
        return all(u == v for r, s in zip(self.rows, other.rows) for u, v in zip(r, s))

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self):
        return not any(v for r in self.rows for v in r)

    def is_identity(self):
        return self.is_square and self == Matrix.identity(self.nrows, self.field)

    def is_rational(self):
        return all(scalar_is_rational(v) for r in self.rows for v in r)

    def to_rational(self):
        if not self.is_rational():
            raise UnsupportedFieldError("matrix has irrational entries")
        return self.convert(QQ)

    def is_integral(self):
        return self.is_rational() and all(
            convert_scalar(QQ, v).denominator == 1 for r in self.rows for v in r)

    def trace(self):
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        s = self.field.zero
        for i in range(self.nrows):
            s = s + self.rows[i][i]
        return s

    def submatrix(self, rows, cols):
        return Matrix([[self.rows[i][j] for j in cols] for i in rows], self.field, len(cols))

    @staticmethod
    def hstack(*mats):
        field = mats[0].field
        return Matrix([sum((list(m.rows[i]) for m in mats), []) for i in range(mats[0].nrows)],
                      field, sum(m.ncols for m in mats))

    @staticmethod
    def vstack(*mats):
        field = mats[0].field
        return Matrix([r for m in mats for r in m.rows], field, mats[0].ncols)

    def rref(self):
        """Reduced row echelon form, pivot columns and rank."""
        if is_rational_field(self.field):
            rows, pivots = _rref_rational(self.rows, self.ncols)
        else:
            rows, pivots = _rref_generic(self.rows, self.ncols, self.field)
        return Matrix(rows, self.field, self.ncols), tuple(pivots), len(pivots)

    def rank(self):
        return self.rref()[2]

    def nullspace(self):
        """Basis of the right kernel, one vector per free column."""
        reduced, pivots, rank = self.rref()
        basis = []
        zero, one = self.field.zero, self.field.one
        pivot_set = set(pivots)
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = [zero] * self.ncols
            v[free] = one
            for i, c in enumerate(pivots):
                v[c] = -reduced.rows[i][free]
            basis.append(tuple(v))
        return basis

    def solve(self, rhs):
        """One solution of self·v = rhs, or None if the system is inconsistent."""
        augmented = Matrix.hstack(self, Matrix.from_columns([rhs], self.field, self.nrows)
                                  if self.nrows else Matrix.zeros(0, 1, self.field))
        reduced, pivots, rank = augmented.rref()
        if pivots and pivots[-1] == self.ncols:
            return None
        v = [self.field.zero] * self.ncols
        for i, c in enumerate(pivots):
            v[c] = reduced.rows[i][self.ncols]
        return tuple(v)

    def inverse(self):
        if not self.is_square:
            raise DimensionError("inverse of a non-square matrix")
        n = self.nrows
        reduced, pivots, rank = Matrix.hstack(self, Matrix.identity(n, self.field)).rref()
        if rank < n or pivots[n - 1] != n - 1:
            raise ZeroDivisionError("matrix is singular")
        return reduced.submatrix(range(n), range(n, 2 * n))

    def charpoly_coeffs(self):
        """Coefficients of det(xI − M), leading coefficient first."""
        if not self.is_square:
            raise DimensionError("characteristic polynomial of a non-square matrix")
        return berkowitz([list(r) for r in self.rows], self.field)

    def det(self):
        coeffs = self.charpoly_coeffs()
        return coeffs[-1] if self.nrows % 2 == 0 else -coeffs[-1]

    def to_lists(self):
        return [[_format_scalar(v) for v in r] for r in self.rows]

    def __str__(self):
        return "\n".join("[" + ", ".join(r) + "]" for r in self.to_lists())

    def __repr__(self):
        return "Matrix({})".format(self.to_lists())


def _format_scalar(v):
    if isinstance(v, QQ.dtype):
        return format_rational(v)
    return str(v)


def _rref_rational(rows, ncols):
    ints = []
    for row in rows:
        m = lcm_of_denominators(row)
        ints.append([int(q.numerator) * (m // int(q.denominator)) for q in row])
    nrows = len(ints)
    pivots = []
    r = 0
    previous = 1
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if ints[i][c]), None)
        if p is None:
            continue
        ints[r], ints[p] = ints[p], ints[r]
        pivot_row = ints[r]
        pivot = pivot_row[c]
        for i in range(r + 1, nrows):
            row = ints[i]
            factor = row[c]
            for j in range(c + 1, ncols):
                quotient, remainder = divmod(pivot * row[j] - factor * pivot_row[j], previous)
                if remainder:
                    raise ArithmeticError("inexact division in fraction-free elimination")
                row[j] = quotient
            row[c] = 0
        previous = pivot
        pivots.append(c)
        r += 1

    # back substitution over QQ
    reduced = [[QQ(v) for v in ints[i]] for i in range(r)]
    for i in reversed(range(r)):
        c = pivots[i]
        inv = QQ.one / reduced[i][c]
        reduced[i] = [v * inv for v in reduced[i]]
        for k in range(i):
            f = reduced[k][c]
            if f:
                reduced[k] = [a - f * b for a, b in zip(reduced[k], reduced[i])]
    reduced.extend([QQ.zero] * ncols for _ in range(nrows - r))
    return reduced, pivots


def _rref_generic(rows, ncols, field):
    work = [list(r) for r in rows]
    nrows = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        inv = field.one / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(nrows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return work, pivots


def berkowitz(rows, field):
    """Division-free characteristic polynomial coefficients of a square array."""
    n = len(rows)
    if n == 0:
        return [field.one]
    a = rows[0][0]
    top = rows[0][1:]
    left = [rows[i][0] for i in range(1, n)]
    sub = [r[1:] for r in rows[1:]]
    inner = berkowitz(sub, field)
    column = [field.one, -a]
    v = left
    for _ in range(n - 1):
        s = field.zero
        for p, q in zip(top, v):
            if p and q:
                s = s + p * q
        column.append(-s)
        v = [_dot(r, v, field) for r in sub]
    result = []
    for i in range(n + 1):
        s = field.zero
        for j in range(min(i + 1, n)):
            s = s + column[i - j] * inner[j]
        result.append(s)
    return result


def _dot(row, vector, field):
    s = field.zero
    for p, q in zip(row, vector):
        if p and q:
            s = s + p * q
    return s


def char_poly(m):
    """Monic characteristic polynomial of a matrix whose characteristic polynomial is rational."""
    coeffs = m.charpoly_coeffs()
    if not all(scalar_is_rational(c) for c in coeffs):
        raise UnsupportedFieldError("characteristic polynomial has irrational coefficients")
    return sympy.Poly([QQ.to_sympy(convert_scalar(QQ, c)) for c in coeffs], x, domain=QQ)


def poly_at_matrix(poly, m):
    """Evaluate a univariate polynomial at a square matrix (Horner)."""
    result = Matrix.zeros(m.nrows, m.ncols, m.field)
    identity = Matrix.identity(m.nrows, m.field)
    for c in sympy.Poly(poly, x).all_coeffs():
        result = result * m + identity.scale(to_rational(c))
    return result


def min_poly(m):
    """
    Minimal polynomial of a matrix with rational characteristic polynomial.

    For each Q-irreducible factor p of multiplicity e, the exponent in the minimal polynomial
    is the least k with dim ker p(M)^k = e·deg p.
    """
    cp = char_poly(m)
    _, factors = cp.factor_list()
    result = sympy.Poly(1, x, domain=QQ)
    for factor, multiplicity in factors:
        target = multiplicity * factor.degree()
        evaluated = poly_at_matrix(factor, m)
        power = evaluated
        for k in range(1, multiplicity + 1):
            if m.ncols - power.rank() == target:
                result = result * factor ** k
                break
            power = power * evaluated
        else:
            result = result * factor ** multiplicity
    return result


def nilpotent_exp(n):
    """exp(N) = Σ N^k/k! for a nilpotent square matrix."""
    result = Matrix.identity(n.nrows, n.field)
    power = Matrix.identity(n.nrows, n.field)
    for k in range(1, n.nrows + 1):
        power = power * n
        if power.is_zero():
            break
        result = result + power.scale(QQ(1, factorial(k)))
    return result


def span_equal(rows_a, rows_b, field=QQ):
    """Whether two lists of vectors span the same subspace."""
    rows_a = [r for r in rows_a if any(r)]
    rows_b = [r for r in rows_b if any(r)]
    if not rows_a or not rows_b:
        return not rows_a and not rows_b
    a = Matrix(rows_a, field)
    b = Matrix(rows_b, field)
    rank = a.rank()
    return rank == b.rank() and Matrix.vstack(a, b).rank() == rank


def span_contains(basis_rows, vector, field=QQ):
    """Whether ``vector`` lies in the row span of ``basis_rows``."""
    if not basis_rows:
        return not any(vector)
    base = Matrix(basis_rows, field).rank()
    return Matrix(list(basis_rows) + [vector], field).rank() == base
