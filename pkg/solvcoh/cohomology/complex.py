"""
Finite cochain algebras presented by bases.

Every algebra here exposes the same small surface (dimensions, differential matrices,
products of coordinate vectors, labels) so that cohomology, Massey products and minimal
models work on Chevalley-Eilenberg algebras, their invariant subalgebras and free models alike.
"""
import logging
from itertools import combinations

from sympy.polys.domains import QQ

from ..errors import DimensionError, ModelError
from ..exact import Matrix
from ..exact.rational import format_rational
from .forms import ExteriorForm, multi_index_label, one_form_differentials, differential_of_monomial, \
    sort_with_sign

logger = logging.getLogger(__name__)


class CochainAlgebra:
    """
    Graded-commutative algebra with a differential of degree one, finite in each degree.

    Subclasses implement ``dimension``, ``_differential``, ``_multiply_basis`` and ``label``;
    vectors are tuples of coordinates in the basis of a degree.
    """

    field = QQ
    top = 0

    def __init__(self):
        self._differentials = {}

    def dimension(self, p):
        raise NotImplementedError

    def label(self, p, i):
        raise NotImplementedError

    def _differential(self, p):
        raise NotImplementedError

    def _multiply_basis(self, p, i, q, j):
        """Product of basis elements as a sparse ``{index: coefficient}`` dict."""
        raise NotImplementedError

    def differential(self, p):
        """Matrix of d: Cᵖ → Cᵖ⁺¹ acting on column vectors."""
        if p not in self._differentials:
            if p < 0 or self.dimension(p) == 0 or self.dimension(p + 1) == 0:
                matrix = Matrix.zeros(max(self.dimension(p + 1), 0), max(self.dimension(p), 0), self.field)
            else:
                matrix = self._differential(p)
            self._differentials[p] = matrix
        return self._differentials[p]

    def d(self, p, vector):
        return self.differential(p).apply(vector)

    def zero(self, p):
        return (self.field.zero,) * self.dimension(p)

    def unit(self):
        return (self.field.one,)

    def basis_vector(self, p, i):
        v = [self.field.zero] * self.dimension(p)
        v[i] = self.field.one
        return tuple(v)

    def multiply(self, p, u, q, v):
        n = self.dimension(p + q)
        out = [self.field.zero] * n
        if not n:
            return tuple(out)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in self._multiply_basis(p, i, q, j).items():
                    out[k] = out[k] + ab * c
        return tuple(out)

    def describe(self, p, vector):
        """Readable linear combination of basis labels."""
        parts = []
        for i, c in enumerate(vector):
            if not c:
                continue
            label = self.label(p, i)
            if c == 1:
                parts.append("+ " + label)
            elif c == -1:
                parts.append("- " + label)
            else:
                text = format_rational(c) if isinstance(c, QQ.dtype) else "({})".format(c)
                parts.append(("- " + text[1:] if text.startswith("-") else "+ " + text) + "*" + label)
        if not parts:
            return "0"
        joined = " ".join(parts)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]


class CEAlgebra(CochainAlgebra):
    """The Chevalley-Eilenberg algebra (Λ•g*, d) of a Lie algebra."""

    def __init__(self, lie, field=QQ):
        super().__init__()
        self.lie = lie
        self.field = field
        self.top = lie.dim
        self._bases = [list(combinations(range(lie.dim), p)) for p in range(lie.dim + 1)]
        self._index = [{key: i for i, key in enumerate(basis)} for basis in self._bases]
        self._one_forms = one_form_differentials(lie)

    def __repr__(self):
        return "CEAlgebra({})".format(self.lie.name)

    def dimension(self, p):
        if 0 <= p <= self.top:
            return len(self._bases[p])
        return 0

    def basis(self, p):
        return self._bases[p]

    def index(self, p, indices):
        return self._index[p][tuple(indices)]

    def label(self, p, i):
        return multi_index_label(self._bases[p][i])

    def _differential(self, p):
        columns = []
        rows = self.dimension(p + 1)
        for indices in self._bases[p]:
            column = [self.field.zero] * rows
            for key, c in differential_of_monomial(indices, self._one_forms).items():
                column[self._index[p + 1][key]] += c
            columns.append(column)
        return Matrix.from_columns(columns, self.field, rows)

    def _multiply_basis(self, p, i, q, j):
        sign, key = sort_with_sign(self._bases[p][i] + self._bases[q][j])
        if not sign:
            return {}
        return {self._index[p + q][key]: QQ.one if sign > 0 else -QQ.one}

    def vector(self, form):
        """Coordinates of an :class:`ExteriorForm` in the degree basis."""
        if form.degree > self.top:
            raise DimensionError("{}-form on a {}-dimensional algebra".format(form.degree, self.top))
        v = [self.field.zero] * self.dimension(form.degree)
        for key, c in form.terms.items():
            v[self._index[form.degree][key]] = self.field.convert(c) if self.field != QQ else c
        return tuple(v)

    def form(self, p, vector):
        return ExteriorForm(p, {self._bases[p][i]: c for i, c in enumerate(vector) if c})

    def exterior_power(self, matrix, p):
        """
        Matrix of Λᵖψ on Λᵖg* for ψ given on g* (column j holds ψ(αʲ)).

        Entry (I, J) is the minor of ``matrix`` on rows I and columns J.
        """
        if p == 0:
            return Matrix.identity(1, matrix.field)
        images = [ExteriorForm(1, {(i,): matrix[i, j] for i in range(matrix.nrows) if matrix[i, j]})
                  for j in range(matrix.ncols)]
        columns = []
        for indices in self._bases[p]:
            form = ExteriorForm.unit()
            for k in indices:
                form = form.wedge(images[k])
            column = [matrix.field.zero] * self.dimension(p)
            for key, c in form.terms.items():
                column[self._index[p][key]] = c
            columns.append(column)
        return Matrix.from_columns(columns, matrix.field, self.dimension(p))

    def derivation_power(self, matrix, p):
        """Matrix on Λᵖg* of the derivation extending ``matrix`` on g*."""
        images = [ExteriorForm(1, {(i,): matrix[i, j] for i in range(matrix.nrows) if matrix[i, j]})
                  for j in range(matrix.ncols)]
        columns = []
        for indices in self._bases[p]:
            column = [matrix.field.zero] * self.dimension(p)
            for r, k in enumerate(indices):
                head = ExteriorForm.basis(*indices[:r]) if r else ExteriorForm.unit()
                tail = ExteriorForm.basis(*indices[r + 1:]) if r + 1 < len(indices) else ExteriorForm.unit()
                for key, c in head.wedge(images[k]).wedge(tail).terms.items():
                    column[self._index[p][key]] += c
            columns.append(column)
        return Matrix.from_columns(columns, matrix.field, self.dimension(p))


class SubAlgebra(CochainAlgebra):
    """
    A sub-CDGA of ``parent`` given by a basis per degree.

    Each basis is stored in reduced row echelon form, so coordinates of a member are read off
    the pivot columns.  Closure under d and products is checked as the structure is built.
    """

    def __init__(self, parent, bases, name=None):
        super().__init__()
        self.parent = parent
        self.field = parent.field
        self.top = parent.top
        self.name = name or "sub({})".format(parent)
        self._rows = {}
        self._pivots = {}
        for p in range(self.top + 1):
            vectors = [v for v in bases.get(p, []) if any(v)]
            if not vectors:
                self._rows[p], self._pivots[p] = [], ()
                continue
            reduced, pivots, rank = Matrix(vectors, self.field).rref()
            self._rows[p] = [reduced.row(r) for r in range(rank)]
            self._pivots[p] = pivots

    def __repr__(self):
        return self.name

    def dimension(self, p):
        return len(self._rows.get(p, [])) if 0 <= p <= self.top else 0

    def basis(self, p):
        return list(self._rows[p])

    def label(self, p, i):
        return "[{}]".format(self.parent.describe(p, self._rows[p][i]))

    def coordinates(self, p, vector):
        """Coordinates of a parent vector in the sub basis; ModelError if it is not a member."""
        rows = self._rows.get(p, [])
        coords = tuple(vector[c] for c in self._pivots.get(p, ()))
        rebuilt = [self.field.zero] * len(vector)
        for c, row in zip(coords, rows):
            if c:
                rebuilt = [a + c * b for a, b in zip(rebuilt, row)]
        if any(a != b for a, b in zip(rebuilt, vector)):
            raise ModelError("vector is not in the degree {} part of {}".format(p, self.name))
        return coords

    def embed(self, p, coords):
        out = list(self.parent.zero(p))
        for c, row in zip(coords, self._rows[p]):
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return tuple(out)

    def _differential(self, p):
        d = self.parent.differential(p)
        columns = [self.coordinates(p + 1, d.apply(row)) for row in self._rows[p]]
        return Matrix.from_columns(columns, self.field, self.dimension(p + 1))

    def _multiply_basis(self, p, i, q, j):
        if p + q > self.top:
            return {}
        product = self.parent.multiply(p, self._rows[p][i], q, self._rows[q][j])
        coords = self.coordinates(p + q, product)
        return {k: c for k, c in enumerate(coords) if c}

    def unit(self):
        return (self.field.one,)
