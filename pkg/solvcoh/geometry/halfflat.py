"""
Verification of SU(3)-structures (ω, Ψ) on six-dimensional Lie algebras.

Half-flat means d(ω∧ω) = 0 and d(Re Ψ) = 0; with dω = 0 in addition the structure is
symplectic half-flat.
"""
import logging
from collections import namedtuple, OrderedDict

from sympy.polys.domains import QQ

from ..errors import DimensionError, PreconditionError
from ..cohomology import CEAlgebra, ExteriorForm
from .symplectic import pfaffian, skew_matrix

logger = logging.getLogger(__name__)

WEDGE_CONVENTION = "d(omega^omega) = 0"


class SU3Candidate(namedtuple("SU3Candidate", ["omega", "re_psi", "im_psi"])):
    """A 2-form ω and the real and imaginary parts of the complex 3-form Ψ."""

    @classmethod
    def parse(cls, omega, re_psi, im_psi):
        return cls(ExteriorForm.parse(omega), ExteriorForm.parse(re_psi), ExteriorForm.parse(im_psi))


class HalfFlatReport(namedtuple("HalfFlatReport", ["checks", "half_flat", "symplectic_half_flat",
                                                   "convention"])):
    """``checks`` maps each condition to its outcome, in the order they were tested."""

    def failed(self):
        return [name for name, ok in self.checks.items() if not ok]


def _check_degrees(candidate):
    for name, form, degree in (("omega", candidate.omega, 2), ("Re psi", candidate.re_psi, 3),
                               ("Im psi", candidate.im_psi, 3)):
        if form.terms and form.degree != degree:
            raise PreconditionError("{} must be a {}-form, got degree {}".format(name, degree, form.degree))


def half_flat_verify(g, candidate):
    """Check closedness, compatibility ω∧Ψ = 0 and nondegeneracy of a candidate separately."""
    if g.dim != 6:
        raise DimensionError("SU(3)-structures live on six-dimensional algebras, got {}".format(g.dim))
    _check_degrees(candidate)
    ce = CEAlgebra(g)
    omega = ce.vector(candidate.omega) if candidate.omega.terms else ce.zero(2)
    re_psi = ce.vector(candidate.re_psi) if candidate.re_psi.terms else ce.zero(3)
    im_psi = ce.vector(candidate.im_psi) if candidate.im_psi.terms else ce.zero(3)
    square = ce.multiply(2, omega, 2, omega)
    checks = OrderedDict()
    checks["d(omega^omega) = 0"] = not any(ce.d(4, square))
    checks["d(Re psi) = 0"] = not any(ce.d(3, re_psi))
    checks["omega^Re psi = 0"] = not any(ce.multiply(2, omega, 3, re_psi))
    checks["omega^Im psi = 0"] = not any(ce.multiply(2, omega, 3, im_psi))
    checks["omega nondegenerate"] = bool(pfaffian(skew_matrix(ce, omega)))
    checks["Re psi nonzero"] = any(re_psi)
    half_flat = all(checks.values())
    closed = not any(ce.d(2, omega))
    checks["d omega = 0"] = closed
    logger.debug("SU(3) candidate on %s: %s", g.name, dict(checks))
    return HalfFlatReport(checks, half_flat, half_flat and closed, WEDGE_CONVENTION)


def standard_candidate(indices=(0, 1, 2, 3, 4, 5)):
    """
    ω = α¹²+α³⁴+α⁵⁶ and Ψ = (α¹+iα²)∧(α³+iα⁴)∧(α⁵+iα⁶) on the given ordered basis.
    """
    a, b, c, d, e, f = indices
    one = QQ.one
    omega = ExteriorForm(2, {(a, b): one, (c, d): one, (e, f): one})
    re_psi = ExteriorForm(3, {(a, c, e): one, (a, d, f): -one, (b, c, f): -one, (b, d, e): -one})
    im_psi = ExteriorForm(3, {(a, c, f): one, (a, d, e): one, (b, c, e): one, (b, d, f): -one})
    return SU3Candidate(omega, re_psi, im_psi)
