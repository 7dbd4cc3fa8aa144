"""
s-Lefschetz and hard Lefschetz checks: L^{n−k} = [ω]^{n−k} ⌣ · from H^k to H^{2n−k}.
"""
import logging
import random
from collections import namedtuple
from itertools import combinations_with_replacement
from math import factorial

import sympy
from sympy.polys.domains import QQ

from ..errors import DimensionError, PreconditionError
from ..exact import Matrix
from .symplectic import DEFAULT_SAMPLES, closed_two_forms, skew_matrix, pfaffian, _ambient

logger = logging.getLogger(__name__)


class LefschetzDegree(namedtuple("LefschetzDegree", ["k", "rank", "source", "target", "isomorphism",
                                                     "certified"])):
    """
    Verdict for L^{n−k}: H^k → H^{2n−k}; ``certified`` is False only for a sampled generic
    verdict that was not confirmed symbolically.
    """


class LefschetzReport(namedtuple("LefschetzReport", ["degrees", "s", "top_class"])):

    def holds(self, s=None):
        s = self.s if s is None else s
        return self.top_class and all(d.isomorphism for d in self.degrees if d.k <= s)

    @property
    def hard(self):
        return self.holds(len(self.degrees) - 1)

    def lefschetz_degree(self):
        """The largest s for which the s-Lefschetz property holds, or −1."""
        out = -1
        for d in self.degrees:
            if not (self.top_class and d.isomorphism):
                break
            out = d.k
        return out


def _half(ring):
    if ring.top % 2:
        raise DimensionError("Lefschetz maps need even dimension, got {}".format(ring.top))
    return ring.top // 2


def _power(algebra, omega, m):
    out, degree = algebra.unit(), 0
    for _ in range(m):
        out = algebra.multiply(degree, out, 2, omega)
        degree += 2
    return out


def lefschetz_map(ring, omega, k):
    """Matrix of L^{n−k}: H^k → H^{2n−k} in the representative bases."""
    n = _half(ring)
    algebra = ring.algebra
    power = _power(algebra, omega, n - k)
    columns = [ring.coordinates(2 * n - k, algebra.multiply(2 * (n - k), power, k, rep))
               for rep in ring.representatives(k)]
    return Matrix.from_columns(columns, ring.field, ring.betti(2 * n - k))


def lefschetz_degree(ring, omega, s=None):
    """
    Per-k verdicts for k ≤ s (default n − 1) of a closed 2-form ``omega``.

    ``top_class`` records whether [ω]ⁿ ≠ 0, without which no k is an isomorphism.
    """
    n = _half(ring)
    omega = tuple(omega)
    if not ring.is_cocycle(2, omega):
        raise PreconditionError("the 2-form is not closed")
    s = n - 1 if s is None else min(s, n)
    top_class = ring.betti(2 * n) > 0 and not ring.is_exact(2 * n, _power(ring.algebra, omega, n))
    degrees = []
    for k in range(s + 1):
        source, target = ring.betti(k), ring.betti(2 * n - k)
        rank = lefschetz_map(ring, omega, k).rank() if source and target else 0
        degrees.append(LefschetzDegree(k, rank, source, target, top_class and source == target == rank, True))
    logger.debug("Lefschetz ranks for %s: %s", ring.algebra, [(d.k, d.rank) for d in degrees])
    return LefschetzReport(degrees, s, top_class)


def _symbolic_rank(ring, family, k):
    """Generic rank of L^{n−k} over Q(w), expanding ω^{n−k} multinomially in the family basis."""
    n = _half(ring)
    m = n - k
    algebra = ring.algebra
    reps = ring.representatives(k)
    rows, cols = ring.betti(2 * n - k), len(reps)
    total = sympy.zeros(rows, cols)
    for combo in combinations_with_replacement(range(len(family.basis)), m):
        coefficient = factorial(m)
        monomial = sympy.Integer(1)
        product, degree = algebra.unit(), 0
        for index in set(combo):
            coefficient //= factorial(combo.count(index))
        for index in combo:
            product = algebra.multiply(degree, product, 2, family.basis[index])
            degree += 2
            monomial *= family.symbols[index]
        for j, rep in enumerate(reps):
            coords = ring.coordinates(2 * n - k, algebra.multiply(2 * m, product, k, rep))
            for i, c in enumerate(coords):
                if c:
                    total[i, j] += coefficient * monomial * QQ.to_sympy(c)
    return total.rank(simplify=True)


def generic_lefschetz(ring, s=None, samples=DEFAULT_SAMPLES, seed=0):
    """
    Lefschetz verdicts for the generic symplectic member of the closed 2-forms of
    ``ring.algebra``.

    Rational members off the Pfaffian's zero locus are sampled; a sample of full rank proves the
    generic isomorphism, and a degree no sample reaches is decided by the symbolic rank.
    Returns ``(report, family)``; the report is None when no symplectic member exists.
    """
    n = _half(ring)
    family = closed_two_forms(ring.algebra)
    if family.pfaffian == 0:
        return None, family
    ce, embed = _ambient(family.algebra)
    rng = random.Random(seed)
    reports = []
    attempts = 0
    while len(reports) < samples and attempts < 50 * samples:
        attempts += 1
        values = [QQ(rng.randint(-5, 5)) for _ in family.symbols]
        omega = family.member(values)
        if not pfaffian(skew_matrix(ce, embed(omega))):
            continue
        reports.append(lefschetz_degree(ring, omega, s))
    if not reports:
        raise PreconditionError("no nondegenerate sample among {} attempts".format(attempts))
    s = reports[0].s
    top_class = any(r.top_class for r in reports)
    degrees = []
    for k in range(s + 1):
        best = max((r.degrees[k] for r in reports), key=lambda d: d.rank)
        if best.isomorphism or not best.source or not best.target:
            degrees.append(best)
            continue
        rank = _symbolic_rank(ring, family, k)
        iso = top_class and best.source == best.target == rank
        if rank != best.rank:
            logger.info("degree %d: sampled rank %d, generic rank %d", k, best.rank, rank)
        degrees.append(LefschetzDegree(k, rank, best.source, best.target, iso, True))
    return LefschetzReport(degrees, s, top_class), family
