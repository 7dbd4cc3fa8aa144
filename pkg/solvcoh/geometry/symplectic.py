"""
Closed 2-forms and invariant symplectic structures.

The closed 2-forms of an algebra form a linear family; a symplectic form exists iff the
Pfaffian of the generic member is not identically zero.
"""
import logging
import random
from collections import namedtuple

import sympy
from sympy.polys.domains import QQ

from ..errors import DimensionError
from ..exact import Matrix, to_rational
from ..cohomology import CEAlgebra, SubAlgebra

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 8


def pfaffian(rows):
    """Pfaffian of a skew-symmetric matrix given as nested lists, by expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n % 2:
        return 0
    total = 0
    for j in range(1, n):
        entry = rows[0][j]
        if not entry:
            continue
        keep = [k for k in range(1, n) if k != j]
        minor = [[rows[a][b] for b in keep] for a in keep]
        term = entry * pfaffian(minor)
        total = total + term if j % 2 else total - term
    return total


def skew_matrix(ce, vector, zero=QQ.zero):
    """The skew matrix (ω(X_i, X_j)) of a 2-form given by coordinates in ``ce``."""
    n = ce.top
    rows = [[zero] * n for _ in range(n)]
    for (i, j), c in zip(ce.basis(2), vector):
        if c:
            rows[i][j] = c
            rows[j][i] = -c
    return rows


def _ambient(algebra):
    """The Chevalley-Eilenberg algebra holding the forms of ``algebra`` and an embedding of 2-forms."""
    if isinstance(algebra, SubAlgebra):
        return algebra.parent, lambda v: algebra.embed(2, v)
    if isinstance(algebra, CEAlgebra):
        return algebra, tuple
    ce = CEAlgebra(algebra)
    return ce, tuple


class TwoFormFamily(namedtuple("TwoFormFamily", ["algebra", "basis", "symbols", "generic", "pfaffian"])):
    """
    The closed 2-forms Σ w_I·z_I of an algebra.

    ``basis`` holds closed 2-forms z_I in reduced echelon form (in the algebra's own coordinates),
    ``symbols`` the coefficient named after the pivot form of each z_I, so that w_16 is the
    α¹⁶-coefficient of the generic member.  ``generic`` is that member in the ambient
    Chevalley-Eilenberg coordinates and ``pfaffian`` its Pfaffian.
    """

    def member(self, values):
        """The member with the given rational coefficients, in the algebra's coordinates."""
        values = [to_rational(v) for v in values]
        out = [QQ.zero] * len(self.basis[0]) if self.basis else []
        for c, z in zip(values, self.basis):
            if c:
                out = [a + c * b for a, b in zip(out, z)]
        return tuple(out)

    def pfaffian_at(self, values):
        substitution = {s: QQ.to_sympy(to_rational(v)) for s, v in zip(self.symbols, values)}
        return self.pfaffian.subs(substitution)


def closed_two_forms(algebra):
    """The family of closed 2-forms of a Lie algebra or a cochain algebra."""
    if not isinstance(algebra, (CEAlgebra, SubAlgebra)):
        source = CEAlgebra(algebra)
    else:
        source = algebra
    ce, embed = _ambient(source)
    if ce.top % 2:
        raise DimensionError("symplectic forms need even dimension, got {}".format(ce.top))
    cocycles = source.differential(2).nullspace()
    basis, symbols = [], []
    if cocycles:
        reduced, pivots, rank = Matrix(cocycles, source.field).rref()
        for r in range(rank):
            z = reduced.row(r)
            basis.append(tuple(z))
            ambient = embed(z)
            lead = next(k for k, c in enumerate(ambient) if c)
            i, j = ce.basis(2)[lead]
            symbols.append(sympy.Symbol("w{}_{}".format(i + 1, j + 1)))
    generic = [sympy.Integer(0)] * ce.dimension(2)
    for s, z in zip(symbols, basis):
        for k, c in enumerate(embed(z)):
            if c:
                generic[k] += s * QQ.to_sympy(c)
    pf = sympy.expand(pfaffian(skew_matrix(ce, generic, sympy.Integer(0))))
    return TwoFormFamily(source, basis, symbols, tuple(generic), pf)


class SymplecticReport(namedtuple("SymplecticReport", ["exists", "family", "condition", "sample", "method"])):
    """
    ``condition`` is the factored Pfaffian (nondegeneracy means it does not vanish), ``sample``
    rational coefficients of one symplectic member, ``method`` ``"sample"`` or ``"symbolic"``.
    """

    def __bool__(self):
        return self.exists


def _sample(rng, n):
    return [QQ(rng.randint(-5, 5)) for _ in range(n)]


def symplectic_exists(algebra, samples=DEFAULT_SAMPLES, seed=0):
    """
    Whether the algebra carries a symplectic form, with the generic closed form and its
    nondegeneracy condition.

    Random rational members are tried first; when none is nondegenerate the Pfaffian is
    decided symbolically.
    """
    family = closed_two_forms(algebra)
    condition = sympy.factor(family.pfaffian)
    if not family.symbols:
        return SymplecticReport(family.pfaffian != 0, family, condition, None, "symbolic")
    rng = random.Random(seed)
    for _ in range(samples):
        values = _sample(rng, len(family.symbols))
        if family.pfaffian_at(values) != 0:
            logger.debug("symplectic member of %s found at %s", family.algebra, values)
            return SymplecticReport(True, family, condition, values, "sample")
    exists = family.pfaffian != 0
    sample = None
    if exists:
        sample = _nonvanishing_point(family)
    return SymplecticReport(exists, family, condition, sample, "symbolic")


def _nonvanishing_point(family):
    """A small integer point off the zero locus of a nonzero Pfaffian."""
    n = len(family.symbols)
    for bound in range(1, 4):
        rng = random.Random(bound)
        for _ in range(200):
            values = [QQ(rng.randint(-bound * 3, bound * 3)) for _ in range(n)]
            if family.pfaffian_at(values) != 0:
                return values
    return None
