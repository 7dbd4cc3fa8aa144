"""
Finite-dimensional real Lie algebras given by rational structure constants.

Basis indices are 0-based internally; everything shown to a user is 1-based.
"""
import logging
from collections import namedtuple
from itertools import combinations

from sympy.polys.domains import QQ

from ..errors import DimensionError, JacobiError, PreconditionError
from ..exact import Matrix, char_poly, count_real_roots, to_rational, format_rational

logger = logging.getLogger(__name__)

MAX_DIMENSION = 16


class JacobiReport(namedtuple("JacobiReport", ["valid", "triple", "defect"])):
    """
    Result of :meth:`LieAlgebra.validate`.

    ``triple`` is the first violating (i, j, k), 1-based, and ``defect`` the nonzero cyclic sum.
    """

    def __bool__(self):
        return self.valid


class LieAlgebra:
    """
    Lie algebra with basis X_1..X_n and brackets [X_i, X_j] = Σ_k c_ij^k X_k.

    ``brackets`` maps 0-based pairs (i, j) with i < j to sparse ``{k: c_ij^k}`` dicts.
    ``params`` records the parameter values an algebra was built from, ``irrational`` the
    parameters whose values stand in for irrational numbers, and ``metadata`` anything a
    catalog entry wants to attach (identifications of the modified algebra, lattice notes).
    """

    def __init__(self, dim, brackets=None, name=None, params=None, irrational=(), metadata=None,
                 acting=None, check=True):
        if dim < 0 or dim > MAX_DIMENSION:
            raise DimensionError("dimension {} outside 0..{}".format(dim, MAX_DIMENSION))
        self.dim = dim
        self.name = name or "g"
        self.params = dict(params or {})
        self.irrational = frozenset(irrational)
        self.metadata = dict(metadata or {})
        self.acting = acting
        self.brackets = {}
        for (i, j), vector in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim) or i == j:
                raise DimensionError("bracket index ({}, {}) out of range".format(i + 1, j + 1))
            sign = QQ.one
            if i > j:
                i, j, sign = j, i, -QQ.one
            cleaned = {}
            for k, c in vector.items():
                if not 0 <= k < dim:
                    raise DimensionError("basis index {} out of range".format(k + 1))
                c = to_rational(c) * sign
                if c:
                    cleaned[k] = c
            if cleaned:
                self.brackets[(i, j)] = cleaned
        if check:
            report = self.validate()
            if not report.valid:
                raise JacobiError(report.triple)

    def __repr__(self):
        return "LieAlgebra({}, dim={})".format(self.name, self.dim)

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self.brackets == other.brackets

    def __hash__(self):
        return hash((self.dim, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.brackets.items()))))

    def bracket(self, i, j):
        """[X_i, X_j] as a sparse coordinate dict."""
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def constant(self, i, j, k):
        return self.bracket(i, j).get(k, QQ.zero)

    def bracket_vectors(self, u, v):
        """Bracket of two coordinate vectors."""
        out = [QQ.zero] * self.dim
        for (i, j), vector in self.brackets.items():
            coeff = u[i] * v[j] - u[j] * v[i]
            if coeff:
                for k, c in vector.items():
                    out[k] += coeff * c
        return tuple(out)

    def is_abelian(self):
        return not self.brackets

    def ad(self, i):
        """Matrix of ad_{X_i}: column j holds the coordinates of [X_i, X_j]."""
        columns = []
        for j in range(self.dim):
            b = self.bracket(i, j)
            columns.append([b.get(k, QQ.zero) for k in range(self.dim)])
        return Matrix.from_columns(columns, QQ, self.dim) if self.dim else Matrix.zeros(0, 0)

    def ad_vector(self, v):
        columns = []
        basis = _basis(self.dim)
        for j in range(self.dim):
            columns.append(self.bracket_vectors(v, basis[j]))
        return Matrix.from_columns(columns, QQ, self.dim)

    def validate(self):
        """Check the Jacobi identity on every triple i < j < k."""
        basis = _basis(self.dim)
        for i, j, k in combinations(range(self.dim), 3):
            total = [QQ.zero] * self.dim
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self.bracket(a, b)
                inner_vector = [inner.get(m, QQ.zero) for m in range(self.dim)]
                outer = self.bracket_vectors(inner_vector, basis[c])
                total = [s + t for s, t in zip(total, outer)]
            if any(total):
                logger.debug("Jacobi fails on %s", (i + 1, j + 1, k + 1))
                return JacobiReport(False, (i + 1, j + 1, k + 1), tuple(total))
        return JacobiReport(True, None, None)

    def is_unimodular(self):
        return all(not self.ad(i).trace() for i in range(self.dim))

    def is_completely_solvable(self):
        """Every ad_{X_i} has only real eigenvalues (decided by Sturm root counting)."""
        self.require_solvable()
        for i in range(self.dim):
            cp = char_poly(self.ad(i))
            squarefree = cp.sqf_part()
            if count_real_roots(squarefree) != squarefree.degree():
                return False
        return True

    def span_of_brackets(self, left, right):
        """Basis (rows, rref) of span{[u, v] : u ∈ left, v ∈ right}."""
        vectors = [self.bracket_vectors(u, v) for u in left for v in right]
        vectors = [v for v in vectors if any(v)]
        if not vectors:
            return []
        reduced, _, rank = Matrix(vectors, QQ).rref()
        return [reduced.row(r) for r in range(rank)]

    def derived_series(self):
        """Dimensions of g ⊇ [g,g] ⊇ ... until the series stabilises."""
        current = _basis(self.dim)
        dims = [len(current)]
        while current:
            following = self.span_of_brackets(current, current)
            if len(following) == len(current):
                break
            current = following
            dims.append(len(current))
        return dims

    def lower_central_series(self):
        basis = _basis(self.dim)
        current = basis
        dims = [len(current)]
        while current:
            following = self.span_of_brackets(basis, current)
            if len(following) == len(current):
                break
            current = following
            dims.append(len(current))
        return dims

    def is_solvable(self):
        return self.derived_series()[-1] == 0

    def is_nilpotent(self):
        return self.lower_central_series()[-1] == 0

    def require_solvable(self):
        if not self.is_solvable():
            raise PreconditionError("{} is not solvable".format(self.name))

    def acting_index(self):
        """
        Index k of an almost-abelian presentation R·X_k ⋉ span{X_j : j ≠ k}, or None.

        The largest k is taken such that every nonzero bracket involves X_k and no bracket
        has an X_k component; an abelian algebra uses its last basis vector.
        """
        if self.dim == 0:
            return None
        if self.acting is not None:
            return self.acting if self._can_act(self.acting) else None
        if not self.brackets:
            return self.dim - 1
        for k in reversed(range(self.dim)):
            if self._can_act(k):
                return k
        return None

    def _can_act(self, k):
        return all(k in pair for pair in self.brackets) and \
            all(k not in vector for vector in self.brackets.values())

    def is_almost_abelian(self):
        return self.acting_index() is not None

    def ideal_indices(self):
        k = self.acting_index()
        if k is None:
            raise PreconditionError("{} is not almost abelian".format(self.name))
        return [j for j in range(self.dim) if j != k]

    def almost_abelian_matrix(self):
        """
        The matrix A of X ↦ [X, X_k] on the abelian ideal.

        Column i holds the coordinates of [X_i, X_k] in the ideal basis, which is the layout
        of the bracket tables ([X_1, X_6] = aX_1, ...).
        """
        k = self.acting_index()
        ideal = self.ideal_indices()
        columns = []
        for i in ideal:
            b = self.bracket(i, k)
            columns.append([b.get(j, QQ.zero) for j in ideal])
        return Matrix.from_columns(columns, QQ, len(ideal))

    @classmethod
    def from_almost_abelian(cls, matrix, name=None, **kwargs):
        """R ⋉_A R^n with the acting vector last: [X_i, X_{n+1}] = Σ_j A_ji X_j."""
        n = matrix.nrows
        brackets = {}
        for i in range(n):
            vector = {j: matrix[j, i] for j in range(n) if matrix[j, i]}
            if vector:
                brackets[(i, n)] = vector
        return cls(n + 1, brackets, name=name, **kwargs)

    def with_acting_matrix(self, matrix, name=None, **kwargs):
        """Same basis and acting index, with the action on the ideal replaced by ``matrix``."""
        k = self.acting_index()
        ideal = self.ideal_indices()
        brackets = {}
        for col, i in enumerate(ideal):
            vector = {ideal[row]: matrix[row, col] for row in range(len(ideal)) if matrix[row, col]}
            if vector:
                brackets[(i, k)] = vector
        options = dict(params=self.params, irrational=self.irrational, metadata=self.metadata, acting=k)
        options.update(kwargs)
        return LieAlgebra(self.dim, brackets, name=name or self.name, **options)

    def permuted(self, permutation):
        """The same algebra in the basis Y_{σ(i)} = X_i."""
        brackets = {}
        for (i, j), vector in self.brackets.items():
            brackets[(permutation[i], permutation[j])] = {permutation[k]: c for k, c in vector.items()}
        acting = permutation[self.acting] if self.acting is not None else None
        return LieAlgebra(self.dim, brackets, name=self.name, params=self.params,
                          irrational=self.irrational, acting=acting)

    def direct_sum_abelian(self, extra):
        return LieAlgebra(self.dim + extra, self.brackets, name="{}+R{}".format(self.name, extra))

    def to_text(self):
        """Serialise in the algebra file grammar."""
        lines = ["dim {};".format(self.dim)]
        for name, value in sorted(self.params.items()):
            lines.append("param {} = {};".format(name, format_rational(value)))
        for (i, j) in sorted(self.brackets):
            terms = " + ".join("{}*{}".format(format_rational(c), k + 1)
                               for k, c in sorted(self.brackets[(i, j)].items()))
            lines.append("[{},{}] = {};".format(i + 1, j + 1, terms))
        return "\n".join(lines) + "\n"

    def describe(self):
        """Human readable bracket list, e.g. ``[X1,X6] = -4 X1``."""
        out = []
        for (i, j) in sorted(self.brackets):
            terms = " + ".join("{} X{}".format(format_rational(c), k + 1)
                               for k, c in sorted(self.brackets[(i, j)].items()))
            out.append("[X{},X{}] = {}".format(i + 1, j + 1, terms))
        return out


def _basis(n):
    return [tuple(QQ.one if i == j else QQ.zero for j in range(n)) for i in range(n)]
