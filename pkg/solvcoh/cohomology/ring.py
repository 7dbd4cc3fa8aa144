"""
Cohomology of a cochain algebra with chosen representatives and cup products.
"""
import logging
from collections import namedtuple

from ..errors import PreconditionError
from ..exact import Matrix
from .complex import CEAlgebra

logger = logging.getLogger(__name__)


class DegreeData(namedtuple("DegreeData", ["cocycles", "boundaries", "boundary_pivots",
                                           "representatives", "representative_pivots"])):
    """
    Cocycle and coboundary bases of one degree.

    ``boundaries`` and ``representatives`` are in reduced row echelon form; every representative
    vanishes on the boundary pivot columns, which makes it the normal form of its class.
    """

    @property
    def betti(self):
        return len(self.representatives)


def _reduce(vector, rows, pivots):
    out = list(vector)
    for row, c in zip(rows, pivots):
        f = out[c]
        if f:
            out = [a - f * b for a, b in zip(out, row)]
    return out


class CohomologyRing:
    """
    H*(A) of a :class:`~solvcoh.cohomology.complex.CochainAlgebra`, computed degree by degree.

    Classes are handled as coordinate tuples in the basis of representatives of each degree.
    """

    def __init__(self, algebra, top=None):
        self.algebra = algebra
        self.field = algebra.field
        self.top = algebra.top if top is None else top
        self._degrees = {}

    def __repr__(self):
        return "CohomologyRing({}, betti={})".format(self.algebra, self.betti_numbers())

    def degree(self, p):
        if p not in self._degrees:
            self._degrees[p] = self._compute(p)
        return self._degrees[p]

    def _compute(self, p):
        algebra = self.algebra
        n = algebra.dimension(p)
        if n == 0:
            return DegreeData([], [], (), [], ())
        d = algebra.differential(p)
        cocycles = d.nullspace()
        boundaries, boundary_pivots = [], ()
        if p > 0:
            images = [c for c in algebra.differential(p - 1).columns() if any(c)]
            if images:
                reduced, boundary_pivots, rank = Matrix(images, self.field).rref()
                boundaries = [reduced.row(r) for r in range(rank)]
        reps, rep_pivots = [], ()
        candidates = [_reduce(z, boundaries, boundary_pivots) for z in cocycles]
        candidates = [c for c in candidates if any(c)]
        if candidates:
            reduced, rep_pivots, rank = Matrix(candidates, self.field).rref()
            reps = [reduced.row(r) for r in range(rank)]
        logger.debug("H^%d of %s: dim Z=%d dim B=%d", p, algebra, len(cocycles), len(boundaries))
        return DegreeData(cocycles, boundaries, boundary_pivots, reps, rep_pivots)

    def betti(self, p):
        if p < 0 or p > self.top:
            return 0
        return self.degree(p).betti

    def betti_numbers(self):
        return [self.betti(p) for p in range(self.top + 1)]

    def euler_characteristic(self):
        return sum((-1) ** p * b for p, b in enumerate(self.betti_numbers()))

    def representatives(self, p):
        return list(self.degree(p).representatives)

    def describe(self, p):
        return [self.algebra.describe(p, r) for r in self.representatives(p)]

    def is_cocycle(self, p, vector):
        return not any(self.algebra.d(p, vector))

    def coordinates(self, p, vector):
        """Coordinates of the class of a cocycle in the representative basis."""
        if p < 0 or p > self.top:
            return ()
        if not self.is_cocycle(p, vector):
            raise PreconditionError("vector is not a cocycle in degree {}".format(p))
        data = self.degree(p)
        normal = _reduce(vector, data.boundaries, data.boundary_pivots)
        return tuple(normal[c] for c in data.representative_pivots)

    def is_exact(self, p, vector):
        return not any(self.coordinates(p, vector))

    def class_vector(self, p, coords):
        """The cocycle Σ cᵢ·repᵢ."""
        out = list(self.algebra.zero(p))
        for c, row in zip(coords, self.degree(p).representatives):
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return tuple(out)

    def basis_class(self, p, i):
        coords = [self.field.zero] * self.betti(p)
        coords[i] = self.field.one
        return tuple(coords)

    def cup(self, p, a, q, b):
        """
        Cup product of classes given by coordinates; the zero class of an empty space when
        p + q exceeds the top degree.
        """
        if p + q > self.top:
            return ()
        product = self.algebra.multiply(p, self.class_vector(p, a), q, self.class_vector(q, b))
        return self.coordinates(p + q, product)

    def bounding_cochain(self, p, vector):
        """Some x with dx = ``vector``, or None when the cocycle is not exact."""
        if p == 0:
            return () if not any(vector) else None
        return self.algebra.differential(p - 1).solve(vector)

    def cup_matrix(self, p, q):
        """Entry (i, j) lists the coordinates of repᵢ ⌣ repⱼ; used for duality pairings."""
        return [[self.cup(p, self.basis_class(p, i), q, self.basis_class(q, j))
                 for j in range(self.betti(q))] for i in range(self.betti(p))]


def cohomology(g, field=None):
    """Chevalley-Eilenberg cohomology of the Lie algebra ``g``."""
    algebra = CEAlgebra(g) if field is None else CEAlgebra(g, field)
    ring = CohomologyRing(algebra)
    logger.debug("Betti numbers of %s: %s", g.name, ring.betti_numbers())
    return ring


def cup(ring, class_a, class_b):
    """Cup product of ``(degree, coordinates)`` pairs, returned the same way."""
    (p, a), (q, b) = class_a, class_b
    return p + q, ring.cup(p, a, q, b)


def poincare_check(ring):
    """
    Poincaré duality: b_p = b_{n−p} and H^p × H^{n−p} → Hⁿ nondegenerate for every p.

    Only meaningful for unimodular Lie algebras, which is checked when the ring comes from one.
    """
    lie = getattr(ring.algebra, "lie", None)
    if lie is not None and not lie.is_unimodular():
        raise PreconditionError("{} is not unimodular".format(lie.name))
    n = ring.top
    betti = ring.betti_numbers()
    if betti[n] != 1:
        return False
    for p in range(n + 1):
        if betti[p] != betti[n - p]:
            return False
        if not betti[p]:
            continue
        pairing = [[entry[0] for entry in row] for row in ring.cup_matrix(p, n - p)]
        if Matrix(pairing, ring.field).rank() != betti[p]:
            logger.debug("degenerate pairing in degree %d", p)
            return False
    return True
