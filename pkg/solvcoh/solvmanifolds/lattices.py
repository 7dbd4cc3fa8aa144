"""
Lattice criteria for Γ_{t̄} = exp(t̄X)^Z ⋉ Zⁿ-conjugates: integrality of the monodromy.

Γ_{t̄} is a lattice iff exp(t̄A) is conjugate to an integer matrix.  The checks here are the
necessary conditions (integral characteristic and minimal polynomials, multiplicity classes of
eigenvalues) and the sufficient one (an explicit conjugation M·P = P·E with E integral).
"""
import logging
from collections import namedtuple, defaultdict, OrderedDict
from functools import reduce

import sympy
from sympy.polys.domains import QQ

from ..errors import ConstraintError, PreconditionError
from ..exact import Matrix, min_poly, span_contains, sturm_isolate, to_rational, format_rational
from ..exact.matrices import x, scalar_is_rational, convert_scalar, poly_at_matrix
from ..exact.rational import to_sympy
from ..exact.symbolic import symbolic_char_coeffs
from ..lie import catalog_entry
from .presentation import AlmostAbelianPresentation, LatticeCandidate, surrogate_frequency, symbolic_monodromy

logger = logging.getLogger(__name__)

NECESSARY_PASS = "necessary-pass"
NECESSARY_FAIL = "necessary-fail"
VERIFIED = "verified-by-witness"


class IntegralityReport(namedtuple("IntegralityReport", ["verdict", "char_poly", "min_poly", "witness",
                                                         "reason"])):
    """
    ``verdict`` is one of ``necessary-pass``, ``necessary-fail`` and ``verified-by-witness``;
    ``witness`` is the pair (E, P) with M·P = P·E when verified.
    """

    @property
    def verified(self):
        return self.verdict == VERIFIED

    @property
    def failed(self):
        return self.verdict == NECESSARY_FAIL


def _is_integral_poly(poly):
    return all(to_rational(c).denominator == 1 for c in poly.all_coeffs())


def verify_witness(m, witness):
    """Whether (E, P) satisfies M·P = P·E exactly with E integral and P invertible."""
    e, p = witness
    if not e.is_integral():
        return False
    if p.shape != m.shape or e.shape != m.shape or p.rank() != m.nrows:
        return False
    return m * p == p * e


def _jordan_chains(n_matrix, depth, field):
    """Jordan chains of the nilpotent restriction of N to ker N^depth, top vector and length."""
    powers = [Matrix.identity(n_matrix.nrows, field)]
    for _ in range(depth):
        powers.append(powers[-1] * n_matrix)
    chains = []
    for level in range(depth, 0, -1):
        span = list(powers[level - 1].nullspace()) if level > 1 else []
        for top, length in chains:
            span.append(powers[length - level].apply(top))
        for v in powers[level].nullspace():
            if not span_contains(span, v, field):
                chains.append((v, level))
                span.append(v)
    return chains, powers


def _jordan_blocks(m, eigenvalue, depth):
    field = m.field
    n_matrix = m - Matrix.identity(m.nrows, field).scale(eigenvalue)
    chains, powers = _jordan_chains(n_matrix, depth, field)
    columns, blocks = [], []
    for top, length in chains:
        columns.extend(powers[j].apply(top) for j in range(length - 1, -1, -1))
        block = [[QQ.zero] * length for _ in range(length)]
        for i in range(length):
            block[i][i] = eigenvalue
            if i:
                block[i - 1][i] = QQ.one
        blocks.append(Matrix(block, QQ, length))
    return columns, blocks


def _companion_blocks(m, factor):
    """Cyclic Krylov bases inside ker f(M), one companion block each."""
    field = m.field
    kernel = poly_at_matrix(factor, m).nullspace()
    degree = factor.degree()
    coeffs = [to_rational(c) for c in reversed(factor.monic().all_coeffs())]
    companion = [[QQ.zero] * degree for _ in range(degree)]
    for i in range(1, degree):
        companion[i][i - 1] = QQ.one
    for i in range(degree):
        companion[i][degree - 1] = -coeffs[i]
    companion = Matrix(companion, QQ, degree)
    candidates = []
    if kernel:
        total = [field.zero] * m.nrows
        for v in kernel:
            total = [a + b for a, b in zip(total, v)]
        candidates.append(tuple(total))
    candidates.extend(kernel)
    columns, blocks = [], []
    for v in candidates:
        if len(columns) == len(kernel):
            break
        if not any(v) or span_contains(columns, v, field):
            continue
        krylov = [tuple(v)]
        for _ in range(degree - 1):
            krylov.append(m.apply(krylov[-1]))
        columns.extend(krylov)
        blocks.append(companion)
    if len(columns) != len(kernel):
        return None, None
    return columns, blocks


def construct_witness(m):
    """
    An integer matrix E and a conjugator P with M·P = P·E, or None.

    Works factor by factor on the characteristic polynomial: linear factors give Jordan blocks,
    factors of exponent one in the minimal polynomial give companion blocks.
    """
    cp = _rational_char_poly(m)
    mp = min_poly(m)
    exponents = dict((f.monic(), k) for f, k in mp.factor_list()[1])
    columns, blocks = [], []
    for factor, multiplicity in cp.factor_list()[1]:
        factor = factor.monic()
        depth = exponents[factor]
        if factor.degree() == 1:
            eigenvalue = -to_rational(factor.all_coeffs()[1])
            if eigenvalue.denominator != 1:
                return None
            cols, blks = _jordan_blocks(m, eigenvalue, depth)
        elif depth == 1:
            cols, blks = _companion_blocks(m, factor)
            if cols is None:
                return None
        else:
            logger.debug("no witness for factor %s with exponent %d", factor.as_expr(), depth)
            return None
        columns.extend(cols)
        blocks.extend(blks)
    e = Matrix.block_diagonal(blocks, QQ)
    p = Matrix.from_columns(columns, m.field, m.nrows)
    witness = (e, p)
    if not verify_witness(m, witness):
        logger.warning("constructed conjugation failed verification")
        return None
    return witness


def _rational_char_poly(m):
    coeffs = m.charpoly_coeffs()
    if not all(scalar_is_rational(c) for c in coeffs):
        return None
    return sympy.Poly([QQ.to_sympy(convert_scalar(QQ, c)) for c in coeffs], x, domain=QQ)


def lattice_integrality(candidate, witness=None):
    """
    Integrality verdict for a monodromy matrix or a :class:`LatticeCandidate`.

    Rational non-integral characteristic or minimal polynomials reject the candidate; a supplied
    or constructed conjugation to an integer matrix verifies it.
    """
    if isinstance(candidate, LatticeCandidate):
        m = candidate.matrix
        witness = witness or candidate.witness
    else:
        m = candidate
    if not m.is_square:
        raise PreconditionError("monodromy must be square")
    cp = _rational_char_poly(m)
    if cp is None:
        return IntegralityReport(NECESSARY_FAIL, None, None, None,
                                 "characteristic polynomial is not rational")
    if not _is_integral_poly(cp):
        return IntegralityReport(NECESSARY_FAIL, cp, None, None,
                                 "characteristic polynomial is not integral")
    mp = min_poly(m)
    if not _is_integral_poly(mp):
        return IntegralityReport(NECESSARY_FAIL, cp, mp, None, "minimal polynomial is not integral")
    if abs(to_rational(cp.all_coeffs()[-1])) != 1:
        return IntegralityReport(NECESSARY_FAIL, cp, mp, None, "determinant is not ±1")
    if witness is not None:
        if verify_witness(m, witness):
            return IntegralityReport(VERIFIED, cp, mp, witness, "supplied conjugation verified")
        logger.warning("supplied witness does not conjugate the monodromy to an integer matrix")
    constructed = construct_witness(m)
    if constructed is not None:
        return IntegralityReport(VERIFIED, cp, mp, constructed, "conjugation constructed")
    return IntegralityReport(NECESSARY_PASS, cp, mp, None, "polynomials integral, no conjugation found")


def _symbolic_real_parts(pres):
    """
    Each real part of the spectrum of A as a sympy expression, linear in the parameters that
    stand for transcendental reals; None when the surrogate values identify distinct ones.
    """
    g = pres.algebra
    numeric = {a: to_sympy(a) for a in pres.real_parts}
    transcendental = g.metadata.get("transcendental") or []
    if not transcendental:
        return numeric, []
    entry = catalog_entry(g.metadata["catalog"])
    symbols = [sympy.Symbol(name) for name in transcendental]
    values = {sympy.Symbol(k): to_sympy(v) for k, v in g.params.items()}
    found = {}
    for weight in entry.symbolic_weights(g.params):
        real = sympy.expand(weight.subs(sympy.I, 0))
        value = to_rational(real.subs(values))
        if value in found and sympy.expand(found[value] - real) != 0:
            logger.info("real parts %s and %s coincide at the surrogate values", found[value], real)
            return None, symbols
        found[value] = real
    if set(found) != set(numeric):
        return None, symbols
    return found, symbols


def _exponent_basis(real_parts, symbols):
    """
    Write e^{t̄a} = Π w_i^{m_i} with integers m_i, where w_t = e^{t̄·t/D_t} for each symbol t and
    w_1 = e^{t̄/D_1}.  Returns the ``(name, symbol, scale)`` basis and the exponent vectors.
    """
    keys = list(symbols) + [sympy.Integer(1)]
    coefficients = {}
    for a, expr in real_parts.items():
        constant = expr.subs({t: 0 for t in symbols})
        coefficients[a] = [sympy.Rational(expr.coeff(t, 1)) for t in symbols] + [sympy.Rational(constant)]
    basis, denominators = [], []
    for i, key in enumerate(keys):
        denominator = reduce(sympy.ilcm, [c[i].q for c in coefficients.values()], 1)
        name = "w_{}".format(key)
        basis.append((name, sympy.Symbol(name), key / denominator))
        denominators.append(denominator)
    vectors = {a: tuple(int(c * d) for c, d in zip(coeffs, denominators))
               for a, coeffs in coefficients.items()}
    return basis, vectors


def _nilpotency_on(pres, projector):
    power = pres.N * projector
    k = 1
    while not power.is_zero():
        power = pres.N * power
        k += 1
    return k


def symbolic_integrality(pres, q):
    """
    Necessary integrality test for a monodromy whose real exponentials have no exact values.

    The exponentials become monomials in symbols w_i (``symbolic_monodromy``) and the
    characteristic polynomial is computed over Q(w).  If exp(t̄A) is conjugate to an integer
    matrix its eigenvalues are units, so the constant term of the minimal polynomial, a monomial
    ±Π w_i^{e_i}, must be ±1.  That pins the parameters to the relation Σ e_i·log w_i = 0; when
    the relation contradicts the parameter constraints the candidate is rejected.

    Returns None when the test does not apply (rotations that are not ±1 at t̄, surrogate
    values that identify distinct real parts, a determinant that is not ±1 identically).
    """
    if not isinstance(pres, AlmostAbelianPresentation):
        pres = AlmostAbelianPresentation(pres)
    q = to_rational(q)
    if not q:
        return None
    real_parts, symbols = _symbolic_real_parts(pres)
    if real_parts is None:
        return None
    basis, vectors = _exponent_basis(real_parts, symbols)
    names = [symbol for _, symbol, _ in basis]

    def monomial(vector):
        out = sympy.Integer(1)
        for symbol, m in zip(names, vector):
            out *= symbol ** m
        return out

    groups = OrderedDict()
    for component in pres.components:
        if component.is_rotation:
            frequency = surrogate_frequency(component.frequency, pres.algebra)
            if not frequency.is_rational:
                return None
            angle = q * frequency.value
            if angle.denominator != 1:
                return None
            sign = -1 if int(angle.numerator) % 2 else 1
            real = component.frequency.real
        else:
            sign, real = 1, component.eigenvalue
        key = (sign, vectors[real])
        groups[key] = max(groups.get(key, 0), _nilpotency_on(pres, component.projector))

    exponentials = {a: monomial(v) for a, v in vectors.items() if a}
    if not exponentials:
        return None
    m = symbolic_monodromy(pres, exponentials, q, surrogates=True)
    field = m.field
    coeffs = symbolic_char_coeffs(m)
    if not (coeffs[0].equals(1) or coeffs[0].equals(-1)):
        logger.info("determinant %s of the monodromy is not ±1 identically", coeffs[0])
        return None
    minimal = [field.one]
    for (sign, vector), k in groups.items():
        root = field.from_expr(sign * monomial(vector))
        if sum((c * root ** i for i, c in enumerate(coeffs)), field.zero):
            raise PreconditionError("eigenvalue {} is not a root of the characteristic polynomial".format(root))
        for _ in range(k):
            shifted = [field.zero] + minimal
            minimal = [s - root * c for s, c in zip(shifted, minimal + [field.zero])]
    cp = sum((c.as_expr() * x ** i for i, c in enumerate(coeffs)), sympy.Integer(0))
    mp = sum((c.as_expr() * x ** i for i, c in enumerate(minimal)), sympy.Integer(0))
    exponent = [sum(k * vector[i] for (_, vector), k in groups.items()) for i in range(len(basis))]
    constant = minimal[0]
    logger.debug("minimal polynomial over %s: %s", field, mp)
    if not any(exponent):
        return IntegralityReport(NECESSARY_PASS, cp, mp, None,
                                 "constant term {} of the minimal polynomial is ±1".format(constant))
    relation = sympy.expand(sum((e * scale for e, (_, _, scale) in zip(exponent, basis)), sympy.Integer(0)))
    stem = "constant term {} of the minimal polynomial must be ±1, forcing {} = 0".format(constant, relation)
    free = sorted(relation.free_symbols, key=str)
    if not free:
        return IntegralityReport(NECESSARY_FAIL, cp, mp, None, stem + ", impossible")
    if len(free) > 1:
        return IntegralityReport(NECESSARY_PASS, cp, mp, None, stem)
    t = free[0]
    value = to_rational(sympy.solve(relation, t)[0])
    g = pres.algebra
    entry = catalog_entry(g.metadata["catalog"])
    given = {k: v for k, v in g.params.items() if k not in entry.derived}
    given[str(t)] = value
    try:
        entry.check_constraints(entry.resolve(given))
    except ConstraintError as err:
        return IntegralityReport(NECESSARY_FAIL, cp, mp, None,
                                 "{}, i.e. {} = {}, which violates {}".format(
                                     stem, t, format_rational(value), err.constraint))
    return IntegralityReport(NECESSARY_PASS, cp, mp, None,
                             "{}, i.e. {} = {}".format(stem, t, format_rational(value)))


def _angle_key(q, frequency, sign):
    """Argument of e^{±iqπb} as a class mod 2π."""
    if frequency is None:
        return ("real",)
    if frequency.is_rational:
        angle = q * frequency.value * sign
        turns = int(angle.numerator) // (2 * int(angle.denominator))
        return ("rational", angle - 2 * turns)
    if frequency.symbol is not None:
        return ("symbol", frequency.symbol, q * frequency.coefficient * sign)
    return ("sqrt", frequency.radicand, q * frequency.coefficient * sign)


def eigenvalue_layer_check(pres, q):
    """
    Necessary condition on the eigenvalues e^{t̄a}·e^{iθ} of exp(t̄A), without evaluating them.

    Galois conjugates share their multiplicity in the characteristic polynomial, and an
    integral characteristic polynomial of determinant ±1 has irreducible factors with constant
    term ±1.  So the real parts a of the distinct eigenvalues of each multiplicity sum to 0.
    """
    if not isinstance(pres, AlmostAbelianPresentation):
        pres = AlmostAbelianPresentation(pres)
    q = to_rational(q)
    trace = pres.A.trace()
    if q and trace:
        return IntegralityReport(NECESSARY_FAIL, None, None, None,
                                 "det exp(t̄A) = e^(t̄·{}) is not ±1".format(format_rational(trace)))
    counts = defaultdict(int)
    for real, frequency, sign in pres.eigenvalues():
        key = (real if q else QQ.zero,) + (_angle_key(q, frequency, sign) if q else ("real",))
        if key[1:] == ("rational", QQ.zero):
            key = (key[0], "real")
        counts[key] += 1
    layers = defaultdict(list)
    for key, multiplicity in counts.items():
        layers[multiplicity].append(key)
    for multiplicity, keys in sorted(layers.items()):
        total = sum((key[0] for key in keys), QQ.zero)
        if total:
            reals = ", ".join(format_rational(key[0]) for key in keys)
            return IntegralityReport(
                NECESSARY_FAIL, None, None, None,
                "eigenvalues of multiplicity {} have real parts {} summing to {}".format(
                    multiplicity, reals, format_rational(total)))
    return IntegralityReport(NECESSARY_PASS, None, None, None, "multiplicity classes balanced")


class SystemReport(namedtuple("SystemReport", ["satisfiable", "cubic", "r_of_s", "intervals"])):
    """Outcome of :func:`lattice_system_check`; ``intervals`` isolate the admissible roots s."""

    def __bool__(self):
        return self.satisfiable


def lattice_system_check(h1, h2):
    """
    Does (s² + r)/s = h₁, (rs + 1)/s = h₂ have a solution with r > 0 and 0 < s ≤ r²/4,
    s ≠ r − 1, s ≠ 1?

    r is eliminated with a resultant, which leaves a cubic in s; the side conditions become
    polynomial sign conditions at its real roots.
    """
    r, s = sympy.symbols("r s")
    h1, h2 = sympy.Integer(h1), sympy.Integer(h2)
    first = s ** 2 + r - h1 * s
    second = r * s + 1 - h2 * s
    cubic = sympy.Poly(sympy.resultant(first, second, r), s, domain=QQ)
    if cubic.LC() < 0:
        cubic = -cubic
    r_of_s = sympy.expand(sympy.solve(first, r)[0])
    constraints = [
        (r_of_s, ">"),
        (s, ">"),
        (r_of_s ** 2 / 4 - s, ">="),
        (r_of_s - 1 - s, "!="),
        (s - 1, "!="),
    ]
    isolation = sturm_isolate(cubic, [(sympy.expand(e), rel) for e, rel in constraints], gen=s)
    logger.debug("system (%s, %s): cubic %s, %d admissible roots", h1, h2, cubic.as_expr(),
                 len(isolation.intervals))
    return SystemReport(isolation.satisfiable, cubic, r_of_s, isolation.intervals)
