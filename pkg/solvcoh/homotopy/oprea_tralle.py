"""
The nilpotent part U of the fibre cohomology of a mapping torus Rⁿ/Zⁿ → G/Γ → S¹.

The fibre is a torus, so H*(fibre) = Λ(Rⁿ)*.  U is the largest subspace on which the monodromy
acts unipotently; together with the base class it spans a sub-CDGA of the Chevalley-Eilenberg
algebra of the modified algebra whose minimal model is the model of G/Γ.
"""
import logging
from collections import namedtuple
from itertools import combinations

from sympy.polys.domains import QQ

from ..errors import ActionError
from ..exact import Matrix, to_rational, format_rational
from ..lie import LieAlgebra
from ..cohomology import CEAlgebra, SubAlgebra, CohomologyRing
from ..solvmanifolds.presentation import AlmostAbelianPresentation, finite_rotation, modify
from ..solvmanifolds.actions import FiniteAction, invariant_cdga
from .minimal import minimal_model

logger = logging.getLogger(__name__)


def _rows_over_q(rows, field):
    """Reduced rational basis of the span of ``rows``; ActionError if the span is not rational."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    reduced, _, rank = Matrix(rows, field).rref()
    out = []
    for r in range(rank):
        row = Matrix([reduced.row(r)], reduced.field)
        if not row.is_rational():
            raise ActionError("unipotent subspace is not defined over Q")
        out.append(tuple(row.to_rational().row(0)))
    return out


def nilpotent_submodule_U(rho):
    """
    Per degree, the generalised eigenspace of eigenvalue 1 of ``rho``.

    ``rho`` maps degrees to square matrices (or is a single matrix for one degree); the result
    maps degrees to row bases of ker((ρ − I)^dim).
    """
    if isinstance(rho, Matrix):
        rho = {1: rho}
    out = {}
    for p, matrix in sorted(rho.items()):
        n = matrix.nrows
        if not n:
            out[p] = []
            continue
        shifted = (matrix - Matrix.identity(n, matrix.field)) ** n
        out[p] = _rows_over_q(shifted.nullspace(), matrix.field)
    return out


class UModule(namedtuple("UModule", ["presentation", "q", "fiber", "degrees"])):
    """
    ``degrees`` maps p to a rational basis of Uᵖ, as vectors of Λᵖ of the fibre algebra
    ``fiber`` (basis α¹..αⁿ of the ideal, in ideal order).
    """

    def dimension(self, p):
        return len(self.degrees.get(p, []))

    def dimensions(self):
        return [self.dimension(p) for p in range(self.fiber.dim + 1)]

    def describe(self, p):
        """Basis of Uᵖ written with the form labels of the whole algebra."""
        ideal = self.presentation.ideal
        ce = CEAlgebra(self.presentation.algebra)
        return [ce.describe(p, _embed(ce, self.fiber, ideal, p, v)) for v in self.degrees.get(p, [])]


def _fiber(pres):
    return LieAlgebra(pres.n, {}, name="R{}".format(pres.n))


def _embed(ce, fiber, ideal, p, vector):
    """A fibre p-form as a p-form of the whole algebra."""
    out = [QQ.zero] * ce.dimension(p)
    for indices, c in zip(combinations(range(fiber.dim), p), vector):
        if c:
            out[ce.index(p, tuple(ideal[a] for a in indices))] = c
    return tuple(out)


def umodule(pres, q, order=24):
    """
    U for the lattice Γ_{qπ}: the joint kernel on Λᵖ(Rⁿ)* of the derivations of the real
    semisimple part and of the irrational rotations, intersected with the fixed space of the
    finite rotation exp(t̄C)ᵗ.
    """
    if not isinstance(pres, AlmostAbelianPresentation):
        pres = AlmostAbelianPresentation(pres)
    q = to_rational(q)
    fiber = _fiber(pres)
    ce = CEAlgebra(fiber)
    real = (pres.S - pres.C).T
    irrational = (pres.C - pres.C_finite).T
    rotation = finite_rotation(pres, q, order).T
    field = rotation.field
    degrees = {}
    for p in range(pres.n + 1):
        size = ce.dimension(p)
        blocks = [ce.derivation_power(real, p), ce.derivation_power(irrational, p)]
        fixed = ce.exterior_power(rotation, p) - Matrix.identity(size, field)
        stacked = Matrix.vstack(*([b.convert(field) for b in blocks] + [fixed.convert(field)]))
        degrees[p] = _rows_over_q(stacked.nullspace(), field)
        logger.debug("U^%d of %s at %s·π: dimension %d", p, pres.algebra.name, format_rational(q),
                     len(degrees[p]))
    return UModule(pres, q, fiber, degrees)


def u_algebra(umod):
    """(U, 0) as a sub-CDGA of the cochains of the fibre torus."""
    ce = CEAlgebra(umod.fiber)
    return SubAlgebra(ce, umod.degrees, name="U({})".format(umod.presentation.algebra.name))


class OpreaTralleModel(namedtuple("OpreaTralleModel", ["umodule", "algebra", "model", "fiber_model",
                                                       "consistent"])):
    """
    ``algebra`` is U ⊕ α^k∧U inside the Chevalley-Eilenberg algebra of the modified algebra,
    ``model`` its minimal model with base generator A, ``fiber_model`` the minimal model of
    (U, 0), and ``consistent`` the outcome of the comparison with the invariant forms.
    """


def assemble(umod, full=False):
    """The sub-CDGA spanned by U and α^k∧U in the modified algebra."""
    pres = umod.presentation
    target = modify(pres, full=full)
    ce = CEAlgebra(target)
    k = pres.acting
    base = ce.basis_vector(1, k)
    bases = {}
    for p in range(target.dim + 1):
        vectors = [_embed(ce, umod.fiber, pres.ideal, p, v) for v in umod.degrees.get(p, [])]
        if p >= 1:
            for v in umod.degrees.get(p - 1, []):
                vectors.append(ce.multiply(1, base, p - 1, _embed(ce, umod.fiber, pres.ideal, p - 1, v)))
        bases[p] = vectors
    return SubAlgebra(ce, bases, name="U-model({})".format(target.name))


def oprea_tralle_model(pres, q, cap=7, order=24, validate=True):
    """
    Minimal model of G/Γ_{qπ} assembled from U, cross-checked against the minimal model of the
    invariant forms of the covering (Betti numbers and generator counts per degree).
    """
    if not isinstance(pres, AlmostAbelianPresentation):
        pres = AlmostAbelianPresentation(pres)
    umod = umodule(pres, q, order)
    algebra = assemble(umod)
    ring = CohomologyRing(algebra)
    base = algebra.coordinates(1, algebra.parent.basis_vector(1, pres.acting))
    model = minimal_model(algebra, cap, base_vector=base, source_ring=ring)
    fiber_model = minimal_model(u_algebra(umod), cap)
    consistent = True
    if validate:
        action = FiniteAction.from_monodromy(pres, q, order)
        invariant = invariant_cdga(action)
        reference = CohomologyRing(invariant)
        if reference.betti_numbers() != ring.betti_numbers():
            logger.warning("%s at %s·π: U-model Betti numbers %s, invariant forms %s", pres.algebra.name,
                           format_rational(q), ring.betti_numbers(), reference.betti_numbers())
            consistent = False
        else:
            counts = minimal_model(invariant, cap, source_ring=reference).generator_counts()
            if counts != model.generator_counts():
                logger.warning("%s at %s·π: U-model generators %s, invariant forms %s", pres.algebra.name,
                               format_rational(q), model.generator_counts(), counts)
                consistent = False
    return OpreaTralleModel(umod, algebra, model, fiber_model, consistent)
