"""
Triple Massey products ⟨a, b, c⟩ in the cohomology of a cochain algebra.

With dx = a·b and dy = b·c the representative is (−1)^{|a|}(x·c − (−1)^{|a|} a·y); the product
vanishes when its class lies in the indeterminacy [a]·H + H·[c].
"""
import logging
import random
from collections import namedtuple

from sympy.polys.domains import QQ

from ..errors import UndefinedMasseyProductError
from ..exact import span_contains

logger = logging.getLogger(__name__)


class MasseyTriple(namedtuple("MasseyTriple", ["classes", "degree", "x", "y", "representative",
                                               "coordinates", "indeterminacy", "vanishes"])):
    """
    ``classes`` are the (degree, coordinates) inputs, ``x`` and ``y`` the chosen bounding
    cochains, ``indeterminacy`` a spanning list of the class coordinates of [a]·H + H·[c].
    """

    def describe(self, ring):
        labels = []
        for p, coords in self.classes:
            labels.append(ring.algebra.describe(p, ring.class_vector(p, coords)))
        return "<{}>".format(", ".join(labels))


def _random_cocycle(ring, p, rng):
    cocycles = ring.degree(p).cocycles
    out = list(ring.algebra.zero(p))
    for z in cocycles:
        c = QQ(rng.randint(-3, 3))
        if c:
            out = [u + c * v for u, v in zip(out, z)]
    return tuple(out)


def _indeterminacy(ring, a, c, degree):
    (pa, ca), (pc, cc) = a, c
    rows = []
    q = degree - pa
    for i in range(ring.betti(q)):
        rows.append(ring.cup(pa, ca, q, ring.basis_class(q, i)))
    q = degree - pc
    for i in range(ring.betti(q)):
        rows.append(ring.cup(q, ring.basis_class(q, i), pc, cc))
    return [r for r in rows if any(r)]


def massey_triple(ring, a, b, c, seed=None):
    """
    ⟨a, b, c⟩ for classes given as ``(degree, coordinates)``.

    Raises :class:`UndefinedMasseyProductError` unless ab = 0 and bc = 0 in cohomology.
    With ``seed`` the bounding cochains are shifted by random cocycles.
    """
    algebra = ring.algebra
    (pa, ca), (pb, cb), (pc, cc) = a, b, c
    u, v, w = ring.class_vector(pa, ca), ring.class_vector(pb, cb), ring.class_vector(pc, cc)
    degree = pa + pb + pc - 1
    if degree > ring.top:
        raise UndefinedMasseyProductError("⟨a, b, c⟩ lands above the top degree")
    x = ring.bounding_cochain(pa + pb, algebra.multiply(pa, u, pb, v))
    y = ring.bounding_cochain(pb + pc, algebra.multiply(pb, v, pc, w))
    if x is None or y is None:
        raise UndefinedMasseyProductError("products of the classes are not zero in cohomology")
    if seed is not None:
        rng = random.Random(seed)
        shift = _random_cocycle(ring, pa + pb - 1, rng)
        x = tuple(s + t for s, t in zip(x, shift))
        shift = _random_cocycle(ring, pb + pc - 1, rng)
        y = tuple(s + t for s, t in zip(y, shift))
    first = algebra.multiply(pa + pb - 1, x, pc, w)
    second = algebra.multiply(pa, u, pb + pc - 1, y)
    sign = -1 if pa % 2 else 1
    representative = tuple(sign * f - s for f, s in zip(first, second))
    coordinates = ring.coordinates(degree, representative)
    indeterminacy = _indeterminacy(ring, a, c, degree)
    vanishes = span_contains(indeterminacy, coordinates, ring.field)
    return MasseyTriple((a, b, c), degree, x, y, representative, coordinates, indeterminacy, vanishes)


def massey_scan(ring, max_degree=2, first=False, seed=None):
    """
    Non-vanishing triple products of basis classes with degrees between 1 and ``max_degree``.

    Products are tabulated once; only defined triples are evaluated.
    """
    classes = [(p, ring.basis_class(p, i)) for p in range(1, max_degree + 1) for i in range(ring.betti(p))]
    zero_products = set()
    for i, (p, a) in enumerate(classes):
        for j, (q, b) in enumerate(classes):
            if p + q <= ring.top and not any(ring.cup(p, a, q, b)):
                zero_products.add((i, j))
            elif p + q > ring.top:
                zero_products.add((i, j))
    found = []
    for i, j in sorted(zero_products):
        for k in range(len(classes)):
            if (j, k) not in zero_products:
                continue
            a, b, c = classes[i], classes[j], classes[k]
            if a[0] + b[0] + c[0] - 1 > ring.top:
                continue
            triple = massey_triple(ring, a, b, c, seed=seed)
            if not triple.vanishes:
                logger.debug("non-vanishing Massey product %s", triple.describe(ring))
                found.append(triple)
                if first:
                    return found
    return found
