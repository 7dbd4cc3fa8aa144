"""
Formality verdicts for minimal models.

A verdict is only ``formal`` with a certificate (a quasi-isomorphism to cohomology, or a passed
s-formality check) and only ``not-formal`` with a non-vanishing Massey product.  Everything
else is ``unknown``; the failure of the map sending non-closed generators to zero is reported
as a witness but never decides the verdict on its own.
"""
import logging
from collections import namedtuple

from ..exact import Matrix
from .massey import massey_scan

logger = logging.getLogger(__name__)

FORMAL = "formal"
NOT_FORMAL = "not-formal"
UNKNOWN = "unknown"


class FormalityVerdict(namedtuple("FormalityVerdict", ["verdict", "method", "certificate", "witness",
                                                       "massey", "cap"])):
    """
    ``method`` names what decided the verdict (``"psi-map"``, ``"s-formality"``, ``"massey"`` or
    None), ``certificate`` describes the formal map, ``witness`` is the text of the ψ failure and
    ``massey`` the non-vanishing triples found.
    """

    @property
    def formal(self):
        return self.verdict == FORMAL

    def summary(self):
        parts = [self.verdict]
        if self.method:
            parts.append("by {}".format(self.method))
        if self.witness:
            parts.append("({})".format(self.witness))
        return " ".join(parts)


def psi_images(model):
    """Closed generators to their representatives, non-closed generators to zero (None)."""
    return {name: None if name in model.model.d_generators else image
            for name, image in model.images.items()}


def psi_is_cdga_map(model, images=None):
    """ψ(dv) vanishes in cohomology for every non-closed generator v."""
    images = images or psi_images(model)
    free = model.model
    for name in free.nonclosed_names():
        p, vector = free.vector(free.d_generators[name])
        if not model.source_ring.is_exact(p, model.map_vector(p, vector, images)):
            logger.debug("psi(d%s) is not exact", name)
            return False
    return True


def psi_failure(model, images=None):
    """
    A class of the model killed by ψ, as ``(degree, polynomial)``, or None when ψ* is injective
    through degree cap − 1.
    """
    images = images or psi_images(model)
    free, ring = model.model, model.ring
    for p in range(1, model.cap):
        if not ring.betti(p):
            continue
        kernel = model.induced_matrix(p, images).nullspace()
        if kernel:
            return p, free.polynomial(p, ring.class_vector(p, kernel[0]))
    return None


def psi_certificate(model):
    """
    Whether ψ is a CDGA map inducing isomorphisms H^p(model) → H^p(source) for 1 ≤ p < cap.

    Returns ``(holds, witness_text)``.
    """
    images = psi_images(model)
    if not psi_is_cdga_map(model, images):
        return False, "psi does not commute with the differential"
    failure = psi_failure(model, images)
    if failure is not None:
        p, poly = failure
        text = model.model.format_polynomial(poly)
        if "+" in text or " - " in text:
            text = "({})".format(text)
        return False, "psi([{0}]) = 0 but [{0}] != 0".format(text)
    for p in range(1, model.cap):
        b_model, b_source = model.ring.betti(p), model.source_ring.betti(p)
        if b_model != b_source:
            return False, "b{} differs: {} in the model, {} in the source".format(p, b_model, b_source)
        if b_model and model.induced_matrix(p, images).rank() != b_model:
            return False, "psi* is not surjective in degree {}".format(p)
    return True, None


def formality_degree(top):
    """The s for which s-formality decides formality of a closed manifold of dimension ``top``."""
    n = top // 2 if top % 2 == 0 else (top + 1) // 2
    return n - 1


def _restricted_columns(free, p, s):
    """Indices of degree-p monomials in Λ(V^{≤s}) that involve a non-closed generator."""
    nonclosed = set(free.nonclosed_names())
    out = []
    for i, m in enumerate(free.monomials(p)):
        used = [free.names[j] for j, e in enumerate(m) if e]
        if any(free.degree_of(n) > s for n in used):
            continue
        if any(n in nonclosed for n in used):
            out.append(i)
    return out


def s_formality_witness(model, s):
    """
    Closed elements of the ideal of non-closed generators of degree ≤ s inside Λ(V^{≤s}) that
    are not exact, as ``(degree, polynomial)``; None when every such element is exact.

    Only degrees up to the model cap are examined.
    """
    free, ring = model.model, model.ring
    top = min(model.cap, model.source_ring.top + 1)
    for p in range(2, top + 1):
        columns = _restricted_columns(free, p, s)
        if not columns:
            continue
        d = free.differential(p)
        restricted = Matrix.from_columns([d.column(i) for i in columns], d.field, d.nrows)
        for combination in restricted.nullspace():
            vector = [d.field.zero] * free.dimension(p)
            for c, i in zip(combination, columns):
                vector[i] = c
            if not ring.is_exact(p, tuple(vector)):
                return p, free.polynomial(p, vector)
    return None


def formality_verdict(model, s=None, massey_max_degree=2, seed=None, massey=True):
    """
    Decide formality of a minimal model as far as it can be certified.

    1. ψ is a quasi-isomorphism to cohomology up to the cap: formal.
    2. Every closed element of the ideal of non-closed generators in Λ(V^{≤s}) is exact, for
       the s of the source dimension (needs a one-dimensional top class): formal.
    3. A non-vanishing triple Massey product in the source: not formal.
    4. Otherwise unknown.
    """
    holds, witness = psi_certificate(model)
    if holds:
        certificate = "psi: {} and the non-closed generators to 0".format(
            ", ".join("{} -> [{}]".format(n, model.source.describe(model.model.degree_of(n), model.images[n]))
                      for n in model.model.closed_names()))
        return FormalityVerdict(FORMAL, "psi-map", certificate, None, [], model.cap)
    logger.info("psi-map is not a quasi-isomorphism for %s: %s", model.describe(), witness)
    source_ring = model.source_ring
    top = source_ring.top
    if source_ring.betti(top) == 1:
        s = formality_degree(top) if s is None else s
        failure = s_formality_witness(model, s)
        if failure is None:
            return FormalityVerdict(FORMAL, "s-formality", "{}-formal with the non-closed generators as "
                                    "complement".format(s), witness, [], model.cap)
        p, poly = failure
        logger.debug("s-formality fails in degree %d on %s", p, model.model.format_polynomial(poly))
    else:
        logger.debug("top cohomology of %s is not one-dimensional; s-formality skipped", model.source)
    if massey:
        found = massey_scan(source_ring, max_degree=massey_max_degree, first=True, seed=seed)
        if found:
            return FormalityVerdict(NOT_FORMAL, "massey", None, witness, found, model.cap)
    return FormalityVerdict(UNKNOWN, None, None, witness, [], model.cap)
