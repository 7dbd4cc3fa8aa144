"""
Sullivan minimal models, built degree by degree up to a cap.

In each degree k the model first gets closed generators for the classes of Hᵏ(source) it does
not reach yet, then non-closed generators killing the kernel of H^{k+1}(model) → H^{k+1}(source)
until that map is injective.
"""
import logging
from itertools import count

from sympy.polys.domains import QQ

from ..errors import ModelError, PreconditionError
from ..exact import Matrix, span_contains
from ..cohomology import CohomologyRing
from .cdga import FreeCdga

logger = logging.getLogger(__name__)

MAX_GENERATORS = 40
CLOSED_NAMES = ("x", "y", "z", "t", "u", "v", "w")
NONCLOSED_NAMES = ("p", "q", "r", "s")
BASE_NAME = "A"


class MinimalModel:
    """
    A free model together with the map φ: model → source on generators.

    ``images`` sends each generator name to a cochain of the source; φ commutes with d and
    induces isomorphisms on Hᵖ for p < cap and an injection on H^cap.
    """

    def __init__(self, model, source, images, cap, source_ring=None):
        self.model = model
        self.source = source
        self.images = dict(images)
        self.cap = cap
        self.source_ring = source_ring or CohomologyRing(source)
        self._ring = None
        self._monomial_images = {}

    def __repr__(self):
        return "MinimalModel({})".format(self.model.describe_model())

    @property
    def ring(self):
        if self._ring is None:
            self._ring = CohomologyRing(self.model)
        return self._ring

    def describe(self):
        return self.model.describe_model()

    def generator_counts(self):
        return self.model.generator_counts()

    def closed_names(self):
        return self.model.closed_names()

    def image_of_monomial(self, monomial, images=None):
        """φ of a monomial: the product of generator images in factor order."""
        cached = images is None
        if cached and monomial in self._monomial_images:
            return self._monomial_images[monomial]
        images = self.images if images is None else images
        source = self.source
        result, degree = source.unit(), 0
        for i in self.model.factors(monomial):
            image = images[self.model.names[i]]
            d = self.model.degrees[i]
            if image is None:
                result = None
                break
            result = source.multiply(degree, result, d, image)
            degree += d
        if cached:
            self._monomial_images[monomial] = result
        return result

    def map_vector(self, p, vector, images=None):
        """φ (or the multiplicative map given by ``images``) on a degree-p element."""
        out = [self.source.field.zero] * self.source.dimension(p)
        for m, c in zip(self.model.monomials(p), vector):
            if not c:
                continue
            image = self.image_of_monomial(m, images)
            if image is None:
                continue
            out = [a + c * b for a, b in zip(out, image)]
        return tuple(out)

    def induced_matrix(self, p, images=None):
        """Matrix of the induced map Hᵖ(model) → Hᵖ(source) in representative bases."""
        columns = [self.source_ring.coordinates(p, self.map_vector(p, rep, images))
                   for rep in self.ring.representatives(p)]
        return Matrix.from_columns(columns, QQ, self.source_ring.betti(p))

    def verify(self):
        """φd = dφ on generators, bijective on Hᵖ for p < cap and injective on H^cap."""
        for name in self.model.names:
            d = self.model.degree_of(name)
            dv = self.model.d_generators.get(name)
            left = self.source.d(d, self.images[name])
            right = self.map_vector(d + 1, self.model.vector(dv)[1]) if dv else \
                self.source.zero(d + 1)
            if tuple(left) != tuple(right):
                return False
        for p in range(1, self.cap + 1):
            b_model, b_source = self.ring.betti(p), self.source_ring.betti(p)
            rank = self.induced_matrix(p).rank() if b_model and b_source else 0
            if rank != b_model:
                return False
            if p < self.cap and rank != b_source:
                return False
        return True


def _fresh_name(pool, used):
    for name in pool:
        if name not in used:
            return name
    for k in count(1):
        for name in pool:
            candidate = "{}{}".format(name, k)
            if candidate not in used:
                return candidate


def minimal_model(source, cap=7, base_vector=None, max_generators=MAX_GENERATORS, source_ring=None):
    """
    Minimal model of a cochain algebra over Q, up to degree ``cap``.

    ``base_vector`` is an optional degree-1 cocycle of the source whose class becomes the
    generator named ``A`` (the base circle of a mapping torus).
    """
    if cap < 1:
        raise ModelError("model cap must be at least 1")
    ring = source_ring or CohomologyRing(source)
    if ring.betti(0) != 1:
        raise PreconditionError("H^0 of {} is not one-dimensional".format(source))
    model = FreeCdga((), {}, cap, name="M({})".format(source))
    result = MinimalModel(model, source, {}, cap, ring)
    used = set()
    for k in range(1, cap):
        result = _add_closed(result, k, ring, base_vector if k == 1 else None, used)
        while True:
            kernel = _kernel_cocycles(result, k + 1)
            if not kernel:
                break
            result = _add_killers(result, k, kernel, ring, used)
            if len(result.model.names) > max_generators:
                raise ModelError("minimal model of {} needs more than {} generators below degree {}".format(
                    source, max_generators, cap))
        logger.debug("model of %s through degree %d: %s", source, k, result.describe())
    return result


def _add_closed(result, k, ring, base_vector, used):
    """Closed generators for the classes of Hᵏ(source) outside the image of φ*."""
    b = ring.betti(k)
    if not b:
        return result
    image = [tuple(c) for c in result.induced_matrix(k).columns()] if result.ring.betti(k) else []
    candidates = []
    if base_vector is not None and ring.is_cocycle(k, base_vector) and not ring.is_exact(k, base_vector):
        candidates.append((ring.coordinates(k, base_vector), tuple(base_vector), True))
    for i in range(b):
        coords = ring.basis_class(k, i)
        candidates.append((coords, ring.class_vector(k, coords), False))
    generators, images = [], {}
    for coords, cochain, is_base in candidates:
        if span_contains(image, coords):
            continue
        if is_base and BASE_NAME not in used:
            name = BASE_NAME
        else:
            name = _fresh_name(CLOSED_NAMES, used)
        used.add(name)
        image.append(tuple(coords))
        generators.append((name, k))
        images[name] = cochain
    if not generators:
        return result
    model = result.model.extend(generators)
    merged = dict(result.images)
    merged.update(images)
    return MinimalModel(model, result.source, merged, result.cap, result.source_ring)


def _kernel_cocycles(result, p):
    """Cocycles of the model representing a basis of ker(Hᵖ(model) → Hᵖ(source))."""
    if p > result.cap or not result.ring.betti(p):
        return []
    reps = result.ring.representatives(p)
    if not result.source_ring.betti(p):
        return list(reps)
    matrix = result.induced_matrix(p)
    out = []
    for combination in matrix.nullspace():
        vector = [QQ.zero] * len(reps[0])
        for c, rep in zip(combination, reps):
            if c:
                vector = [a + c * b for a, b in zip(vector, rep)]
        out.append(tuple(vector))
    return out


def _add_killers(result, k, kernel, ring, used):
    """Degree-k generators v with dv = z and φ(v) a primitive of φ(z), one per kernel cocycle."""
    generators, differentials, images = [], {}, {}
    for z in kernel:
        target = result.map_vector(k + 1, z)
        primitive = ring.bounding_cochain(k + 1, target)
        if primitive is None:
            raise ModelError("kernel class of the model does not map to an exact cochain")
        name = _fresh_name(NONCLOSED_NAMES, used)
        used.add(name)
        generators.append((name, k))
        differentials[name] = result.model.polynomial(k + 1, z)
        images[name] = tuple(primitive)
    width = len(result.model.names) + len(generators)
    padded = {n: {m + (0,) * (width - len(m)): c for m, c in poly.items()} for n, poly in differentials.items()}
    model = result.model.extend(generators, padded)
    merged = dict(result.images)
    merged.update(images)
    return MinimalModel(model, result.source, merged, result.cap, result.source_ring)
