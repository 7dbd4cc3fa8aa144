"""
Finite cyclic actions on Chevalley-Eilenberg algebras and their invariants.

The covering G̃/Γ̃ → G̃/Γ has the finite deck group Γ/Γ̃, generated by the rotation part of the
monodromy; its action on forms is ψ = exp(t̄C)ᵗ with the acting coordinate fixed.
"""
import logging
from collections import namedtuple

from sympy.polys.domains import QQ

from ..errors import ActionError
from ..exact import Matrix, to_rational, format_rational
from ..cohomology import CEAlgebra, SubAlgebra, CohomologyRing
from .presentation import AlmostAbelianPresentation, finite_rotation, modify

logger = logging.getLogger(__name__)

MAX_ORDER = 120


class FiniteAction:
    """
    A finite-order automorphism ψ of (Λg*, d), given on g* (column j holds ψ(αʲ)).

    The order is searched up to ``max_order`` when not given; ψᵏ = I and the commutation with d
    on 1-forms are both checked on construction.
    """

    def __init__(self, algebra, matrix, order=None, max_order=MAX_ORDER, name=None):
        if matrix.shape != (algebra.dim, algebra.dim):
            raise ActionError("action of shape {} on a {}-dimensional algebra".format(matrix.shape, algebra.dim))
        if matrix.is_rational():
            matrix = matrix.to_rational()
        self.algebra = algebra
        self.matrix = matrix
        self.field = matrix.field
        self.name = name or "psi"
        self.order = self._find_order(order, max_order)
        self._ce = CEAlgebra(algebra)
        self._powers = {}
        self._validate()

    def __repr__(self):
        return "FiniteAction({}, order={})".format(self.algebra.name, self.order)

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, Matrix.identity(algebra.dim), order=1, name="id")

    @classmethod
    def from_monodromy(cls, algebra, q, order=24, full=False):
        """
        The deck action for Γ_{qπ} on the modified algebra, returned with that algebra.

        ``order`` is the cyclotomic order used for the rotation entries.
        """
        pres = algebra if isinstance(algebra, AlmostAbelianPresentation) else AlmostAbelianPresentation(algebra)
        target = modify(pres, full=full)
        rotation = finite_rotation(pres, to_rational(q), order)
        n = pres.algebra.dim
        rows = [[rotation.field.zero] * n for _ in range(n)]
        for a, i in enumerate(pres.ideal):
            for b, j in enumerate(pres.ideal):
                rows[i][j] = rotation[b, a]
        rows[pres.acting][pres.acting] = rotation.field.one
        psi = Matrix(rows, rotation.field, n)
        action = cls(target, psi, name="psi_{}".format(format_rational(q)))
        logger.debug("deck action of %s at %s·π has order %d", pres.algebra.name, format_rational(q),
                     action.order)
        return action

    def _find_order(self, order, max_order):
        identity = Matrix.identity(self.matrix.nrows, self.field)
        if order is not None:
            if self.matrix ** order != identity:
                raise ActionError("{} does not have order dividing {}".format(self.name, order))
            power = self.matrix
            for k in range(1, order + 1):
                if power == identity:
                    return k
                power = power * self.matrix
        power = self.matrix
        for k in range(1, max_order + 1):
            if power == identity:
                return k
            power = power * self.matrix
        raise ActionError("{} has no finite order up to {}".format(self.name, max_order))

    def _validate(self):
        d1 = self._ce.differential(1)
        if not self.power(2) * d1 == d1 * self.matrix:
            raise ActionError("{} does not commute with the differential of {}".format(
                self.name, self.algebra.name))

    def power(self, p):
        """Λᵖψ on Λᵖg*."""
        if p not in self._powers:
            self._powers[p] = self._ce.exterior_power(self.matrix, p)
        return self._powers[p]

    def averaging(self, p):
        """The projector (1/k)·Σ_j (Λᵖψ)ʲ onto the invariant p-forms."""
        return _average(self.power(p), self.order)


def _average(matrix, order):
    total = Matrix.zeros(matrix.nrows, matrix.ncols, matrix.field)
    power = Matrix.identity(matrix.nrows, matrix.field)
    for _ in range(order):
        total = total + power
        power = power * matrix
    return total.scale(QQ(1, order))


def _image_rows(projector):
    """Rational row basis of the column space, in reduced row echelon form."""
    if not projector.ncols:
        return []
    reduced, _, rank = projector.T.rref()
    rows = [reduced.row(r) for r in range(rank)]
    if not all(Matrix([row], reduced.field).is_rational() for row in rows):
        raise ActionError("invariant subspace is not defined over Q")
    return [tuple(Matrix([row], reduced.field).to_rational().row(0)) for row in rows]


def _ring_over(ring, field):
    if field == ring.field:
        return ring
    lie = getattr(ring.algebra, "lie", None)
    if lie is None:
        raise ActionError("cannot extend scalars of {}".format(ring.algebra))
    return CohomologyRing(CEAlgebra(lie, field))


class FixedClasses(namedtuple("FixedClasses", ["degree", "coordinates", "labels"])):
    """Invariant classes of one degree, as rational coordinates in the ring's class basis."""

    @property
    def dimension(self):
        return len(self.coordinates)


def action_on_cohomology(act, ring, p):
    """Matrix of ψ* on Hᵖ in the representative basis (over the field of ψ)."""
    ring = _ring_over(ring, act.field)
    power = act.power(p)
    columns = [ring.coordinates(p, power.apply(rep)) for rep in ring.representatives(p)]
    return Matrix.from_columns(columns, act.field, ring.betti(p))


def fixed_classes(act, ring, p):
    """The ψ-invariant part of Hᵖ, via the averaging projector on classes."""
    if ring.betti(p) == 0:
        return FixedClasses(p, [], [])
    projector = _average(action_on_cohomology(act, ring, p), act.order)
    coordinates = _image_rows(projector)
    labels = [ring.algebra.describe(p, ring.class_vector(p, c)) for c in coordinates]
    return FixedClasses(p, coordinates, labels)


def invariant_cdga(act):
    """The sub-CDGA of ψ-invariant forms of (Λg*, d), with a rational basis in each degree."""
    parent = CEAlgebra(act.algebra)
    bases = {}
    for p in range(act.algebra.dim + 1):
        bases[p] = _image_rows(act.averaging(p))
        logger.debug("invariant %d-forms under %s: %d", p, act.name, len(bases[p]))
    return SubAlgebra(parent, bases, name="{}^{}".format(act.algebra.name, act.name))


def invariant_cohomology(act, ring=None):
    """
    H*(g̃)^ψ as the cohomology of the invariant subalgebra.

    The Betti numbers are cross-checked against the fixed classes of ψ* on H*(g̃); a disagreement
    means ψ is not an automorphism of the complex and raises :class:`ActionError`.
    """
    invariant = CohomologyRing(invariant_cdga(act))
    ring = ring or CohomologyRing(CEAlgebra(act.algebra))
    for p in range(act.algebra.dim + 1):
        expected = fixed_classes(act, ring, p).dimension
        if invariant.betti(p) != expected:
            raise ActionError("degree {}: invariant subalgebra gives {} classes, {} fixes {}".format(
                p, invariant.betti(p), act.name, expected))
    return invariant
