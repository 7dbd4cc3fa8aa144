"""
Almost abelian Lie algebras R ⋉_A Rⁿ: Jordan-Chevalley parts, compact part, the modified
algebra, the Mostow condition and monodromy matrices exp(t̄A) at t̄ = qπ.
"""
import logging
from collections import namedtuple

import sympy
from sympy.polys.domains import QQ

from ..errors import PreconditionError, TranscendentalEntryError, UnsupportedAngleError, \
    UnsupportedFactorError
from ..exact import Matrix, char_poly, poly_at_matrix, nilpotent_exp, to_rational, format_rational, \
    cyclotomic_field, span_contains, stem_field_roots
from ..exact.matrices import x
from ..exact.numberfield import NumberFieldElement, field_of
from ..exact.symbolic import RationalFunctionField

logger = logging.getLogger(__name__)


class Frequency(namedtuple("Frequency", ["real", "square", "symbol", "coefficient", "radicand"])):
    """
    A rotation frequency: eigenvalues real ± i·b with b² = ``square``.

    b is ``coefficient``·√``radicand`` (radicand squarefree, 1 when b is rational), or
    ``coefficient``·``symbol`` when b stands for a declared irrational parameter.
    """

    @property
    def is_rational(self):
        return self.symbol is None and self.radicand == 1

    @property
    def value(self):
        if not self.is_rational:
            raise TranscendentalEntryError("frequency {} is not rational".format(self))
        return self.coefficient

    def __str__(self):
        if self.symbol is not None:
            b = "{}*{}".format(format_rational(self.coefficient), self.symbol)
        elif self.radicand == 1:
            b = format_rational(self.coefficient)
        else:
            b = "{}*sqrt({})".format(format_rational(self.coefficient), self.radicand)
        return "{} ± {} i".format(format_rational(self.real), b)


class Component(namedtuple("Component", ["factor", "projector", "generator", "eigenvalue", "frequency"])):
    """
    Primary component of the semisimple part for one irreducible factor of its minimal polynomial.

    Linear factors carry their ``eigenvalue``; quadratic ones their ``frequency`` and the compact
    generator C_i = (S − aI)·E_i, where E_i is the ``projector``.
    """

    @property
    def is_rotation(self):
        return self.frequency is not None

    @property
    def is_irrational(self):
        return self.is_rotation and self.frequency.symbol is not None


def jordan_chevalley(a):
    """
    Additive Jordan-Chevalley decomposition A = S + N over Q.

    S is found by Newton iteration S ← S − f(S)·f'(S)⁻¹ on the squarefree part f of the
    characteristic polynomial; both parts are polynomials in A.
    """
    if not a.is_square:
        raise PreconditionError("Jordan-Chevalley decomposition of a non-square matrix")
    if a.nrows == 0:
        return a, a
    f = char_poly(a).sqf_part()
    derivative = f.diff(x)
    s = a
    for _ in range(a.nrows + 1):
        value = poly_at_matrix(f, s)
        if value.is_zero():
            break
        s = s - value * poly_at_matrix(derivative, s).inverse()
    return s, a - s


def _split_square(square):
    """b² = m/n  →  (k/n, d) with b = (k/n)·√d and d squarefree."""
    m, n = int(square.numerator), int(square.denominator)
    product = m * n
    k, d = 1, 1
    for prime, exponent in sympy.factorint(product).items():
        k *= prime ** (exponent // 2)
        if exponent % 2:
            d *= prime
    return QQ(k, n), d


def _frequency(factor, irrational_values):
    coeffs = [to_rational(c) for c in factor.all_coeffs()]
    beta, gamma = coeffs[1], coeffs[2]
    real = -beta / 2
    square = gamma - real * real
    for name, value in irrational_values:
        if value * value == square:
            return Frequency(real, square, name, QQ.one if value > 0 else -QQ.one, 1)
    coefficient, radicand = _split_square(square)
    return Frequency(real, square, None, coefficient, radicand)


def compact_part(s, irrational_values=()):
    """
    The compact part C of a semisimple rational matrix, with its primary components.

    On the component of a quadratic factor x² + βx + γ, C = S − aI with a = −β/2; on linear
    components C = 0.  ``irrational_values`` are ``(name, value)`` pairs naming the frequencies
    that stand for irrational numbers.
    """
    n = s.nrows
    components = []
    if n == 0:
        return Matrix.zeros(0, 0), components
    f = char_poly(s).sqf_part()
    _, factors = f.factor_list()
    identity = Matrix.identity(n)
    total = Matrix.zeros(n, n)
    for factor, _ in factors:
        degree = factor.degree()
        if degree > 2:
            raise UnsupportedFactorError(
                "irreducible factor {} of degree {} is not supported".format(factor.as_expr(), degree))
        cofactor = f.exquo(factor)
        if cofactor.degree() == 0:
            projector = identity
        else:
            u, _, h = sympy.gcdex(cofactor, factor)
            idempotent = (u * cofactor).rem(f)
            projector = poly_at_matrix(idempotent, s)
        if degree == 1:
            coeffs = factor.monic().all_coeffs()
            eigenvalue = -to_rational(coeffs[1])
            components.append(Component(factor, projector, Matrix.zeros(n, n), eigenvalue, None))
            continue
        frequency = _frequency(factor.monic(), irrational_values)
        generator = (s - identity.scale(frequency.real)) * projector
        total = total + generator
        components.append(Component(factor, projector, generator, None, frequency))
    return total, components


class AlmostAbelianPresentation:
    """
    g = R·X_k ⋉_A span{X_j : j ≠ k} with A the matrix of X ↦ [X, X_k] on the ideal.

    Parts: A = S + N (Jordan-Chevalley), the primary components of S with their rotation
    frequencies, the compact part C and its finite part C_finite (blocks with rational or
    quadratic-irrational frequency; blocks of declared irrational parameters are left out).
    """

    def __init__(self, algebra):
        if not algebra.is_almost_abelian():
            raise PreconditionError("{} is not almost abelian".format(algebra.name))
        self.algebra = algebra
        self.acting = algebra.acting_index()
        self.ideal = algebra.ideal_indices()
        self.n = len(self.ideal)
        self.A = algebra.almost_abelian_matrix()
        self.S, self.N = jordan_chevalley(self.A)
        irrational = [(name, algebra.params[name]) for name in sorted(algebra.irrational)
                      if algebra.params.get(name)]
        self.C, self.components = compact_part(self.S, irrational)
        self.C_finite = Matrix.zeros(self.n, self.n)
        for component in self.components:
            if component.is_rotation and not component.is_irrational:
                self.C_finite = self.C_finite + component.generator

    def __repr__(self):
        return "AlmostAbelianPresentation({})".format(self.algebra.name)

    @property
    def frequencies(self):
        return [c.frequency for c in self.components if c.is_rotation]

    @property
    def real_parts(self):
        """Distinct real parts of the eigenvalues of A."""
        values = set()
        for c in self.components:
            values.add(c.eigenvalue if not c.is_rotation else c.frequency.real)
        return sorted(values)

    def eigenvalues(self):
        """
        Eigenvalues of A with algebraic multiplicity, as ``(real, frequency, sign)`` triples;
        real eigenvalues have frequency None and sign 0.
        """
        out = []
        cp = char_poly(self.A)
        _, factors = cp.factor_list()
        for factor, multiplicity in factors:
            if factor.degree() == 1:
                value = -to_rational(factor.monic().all_coeffs()[1])
                out.extend([(value, None, 0)] * multiplicity)
            elif factor.degree() == 2:
                frequency = next(c.frequency for c in self.components if c.is_rotation
                                 and c.factor.monic() == factor.monic())
                out.extend([(frequency.real, frequency, 1), (frequency.real, frequency, -1)] * multiplicity)
            else:
                raise UnsupportedFactorError("irreducible factor {} of degree {}".format(
                    factor.as_expr(), factor.degree()))
        return out

    def is_completely_solvable(self):
        return all(not c.is_rotation for c in self.components)


def presentation(algebra):
    return AlmostAbelianPresentation(algebra)


def modify(algebra, full=False):
    """
    The modified algebra g̃ = R ⋉_{A − C} Rⁿ.

    Rotation blocks whose frequency is a declared irrational parameter are kept unless
    ``full`` is set, in which case every compact block is removed.
    """
    pres = algebra if isinstance(algebra, AlmostAbelianPresentation) else AlmostAbelianPresentation(algebra)
    g = pres.algebra
    c = pres.C if full else pres.C_finite
    name = g.name if g.name.endswith("~") else g.name + "~"
    metadata = dict(g.metadata)
    metadata["modified_from"] = g.name
    modified = g.with_acting_matrix(pres.A - c, name=name, metadata=metadata)
    logger.debug("modified %s: %s", g.name, "; ".join(modified.describe()))
    return modified


class MostowReport(namedtuple("MostowReport", ["holds", "q", "witness", "frequencies"])):
    """
    ``witness`` is ``(coefficients, frequencies)`` with Σ cⱼ·q·bⱼ = 1 when the condition fails,
    i.e. πi is a rational combination of eigenvalues of t̄A.
    """

    def __bool__(self):
        return self.holds


def _frequency_coordinates(frequencies):
    """Coordinates of each bⱼ over the Q-independent basis {1, √d, declared symbols}."""
    axes = ["1"]
    for f in frequencies:
        key = f.symbol if f.symbol is not None else ("sqrt", f.radicand)
        if f.symbol is None and f.radicand == 1:
            continue
        if key not in axes:
            axes.append(key)
    vectors = []
    for f in frequencies:
        v = [QQ.zero] * len(axes)
        if f.symbol is not None:
            v[axes.index(f.symbol)] = f.coefficient
        elif f.radicand == 1:
            v[0] = f.coefficient
        else:
            v[axes.index(("sqrt", f.radicand))] = f.coefficient
        vectors.append(v)
    return axes, vectors


def mostow_test(pres, q):
    """
    Decide the Mostow condition for the lattice at t̄ = qπ.

    It fails exactly when 1 lies in the Q-span of {q·bⱼ} over the rotation frequencies bⱼ.
    Declared irrational parameters are taken to be Q-independent of 1 and of square roots.
    """
    if not isinstance(pres, AlmostAbelianPresentation):
        pres = AlmostAbelianPresentation(pres)
    q = to_rational(q)
    frequencies = pres.frequencies
    if not frequencies or not q:
        return MostowReport(True, q, None, frequencies)
    axes, vectors = _frequency_coordinates(frequencies)
    scaled = [[q * c for c in v] for v in vectors]
    target = [QQ.one] + [QQ.zero] * (len(axes) - 1)
    if not span_contains(scaled, target):
        return MostowReport(True, q, None, frequencies)
    solution = Matrix.from_columns(scaled, QQ, len(axes)).solve(target)
    logger.debug("Mostow condition fails for %s at %s·π", pres.algebra.name, format_rational(q))
    return MostowReport(False, q, solution, frequencies)


def _exponential(a, exponentials, q):
    if not a or not q:
        return QQ.one
    for key, value in (exponentials or {}).items():
        if to_rational(key) == a:
            return value
    raise TranscendentalEntryError(
        "entry e^({}·{}π) needs an exact value; pass it in exponentials".format(
            format_rational(a), format_rational(q)))


def _rotation_scalars(frequency, q, field):
    """cos(qπb) and sin(qπb)/b for a rational frequency b."""
    if not q:
        return QQ.one, QQ.zero
    if not frequency.is_rational:
        raise TranscendentalEntryError(
            "rotation by {}·π·({}) has no exact cyclotomic value".format(format_rational(q), frequency))
    b = frequency.value
    cos = field.cos_pi(q * b)
    sin = field.sin_pi(q * b) * (QQ.one / b)
    return _shrink(cos), _shrink(sin)


def _shrink(value):
    if isinstance(value, NumberFieldElement) and value.is_rational():
        return value.to_rational()
    return value


def _combine(terms, n):
    """Σ cᵢ·Mᵢ over the common field of the scalars cᵢ."""
    field = field_of(c for c, _ in terms)
    total = Matrix.zeros(n, n, field)
    for c, m in terms:
        if c:
            total = total + m.convert(field).scale(c)
    return total


def monodromy(pres, q, exponentials=None, order=24):
    """
    exp(t̄A) on the ideal at t̄ = qπ.

    exp(t̄S) is Σ e^{t̄a}[cos(t̄b)E + sin(t̄b)/b·C] over the primary components (e^{t̄λ}E on real
    ones).  Real exponentials come from ``exponentials`` ({a: exact value}); rotation entries live
    in Q(ζ_order).  For N ≠ 0 the unipotent factor exp(t̄N) is replaced by its conjugate exp(N),
    see :func:`lattice_candidate`.
    """
    if not isinstance(pres, AlmostAbelianPresentation):
        pres = AlmostAbelianPresentation(pres)
    q = to_rational(q)
    n = pres.n
    if not q:
        return Matrix.identity(n)
    field = cyclotomic_field(order)
    terms = []
    for component in pres.components:
        if not component.is_rotation:
            terms.append((_exponential(component.eigenvalue, exponentials, q), component.projector))
            continue
        scale = _exponential(component.frequency.real, exponentials, q)
        cos, sin = _rotation_scalars(component.frequency, q, field)
        terms.append((_product(scale, cos), component.projector))
        terms.append((_product(scale, sin), component.generator))
    result = _combine(terms, n)
    if not pres.N.is_zero():
        result = result * nilpotent_exp(pres.N)
    return result


def _product(a, b):
    if isinstance(b, NumberFieldElement) and not isinstance(a, NumberFieldElement):
        return b * a
    return a * b


def exponentials_from_roots(pres, poly):
    """
    Exact values for the real exponentials e^{t̄a}: the roots of ``poly`` in its stem field,
    assigned to the nonzero real parts a in increasing order.
    """
    if not isinstance(pres, AlmostAbelianPresentation):
        pres = AlmostAbelianPresentation(pres)
    _, roots = stem_field_roots(sympy.sympify(poly, locals={"x": x}))
    roots = sorted(roots, key=lambda r: r.evalf() if isinstance(r, NumberFieldElement) else r)
    reals = [a for a in pres.real_parts if a]
    if len(roots) != len(reals):
        raise PreconditionError("{} roots for the {} nonzero real parts {}".format(
            len(roots), len(reals), ", ".join(format_rational(a) for a in reals)))
    return dict(zip(reals, roots))


def surrogate_frequency(frequency, algebra):
    """A declared irrational frequency evaluated at the parameter's current value."""
    if frequency.symbol is None:
        return frequency
    value = frequency.coefficient * to_rational(algebra.params[frequency.symbol])
    return Frequency(frequency.real, frequency.square, None, value, 1)


def symbolic_monodromy(pres, exponentials, q=None, surrogates=False):
    """
    exp(t̄A) over a rational-function field.

    ``exponentials`` maps each nonzero real part a to a sympy expression standing for e^{t̄a},
    e.g. ``{-4: 1/(w*v), 3: w, 1: v}``.  With ``q`` None the angle is left open: every rotation
    frequency must be 1, and the block uses u = 2cos t̄ and σ = sin t̄.  With ``surrogates``
    declared irrational frequencies rotate by their parameter's value.
    """
    if not isinstance(pres, AlmostAbelianPresentation):
        pres = AlmostAbelianPresentation(pres)
    symbols = set()
    for expr in exponentials.values():
        symbols |= sympy.sympify(expr).free_symbols
    u, sigma = sympy.symbols("u sigma")
    if q is None:
        symbols |= {u, sigma}
    field = RationalFunctionField(sorted(symbols, key=str))

    def exponential(a):
        if not a:
            return field.one
        for key, value in exponentials.items():
            if to_rational(key) == a:
                return field.from_expr(value)
        raise TranscendentalEntryError("no symbol given for e^(t·{})".format(format_rational(a)))

    n = pres.n
    total = Matrix.zeros(n, n, field)
    for component in pres.components:
        if not component.is_rotation:
            total = total + component.projector.convert(field).scale(exponential(component.eigenvalue))
            continue
        scale = exponential(component.frequency.real)
        if q is None:
            if component.frequency.square != 1:
                raise UnsupportedAngleError("an open angle needs rotation frequency 1")
            cos, sin = field.from_expr(u / 2), field.from_expr(sigma)
        else:
            frequency = surrogate_frequency(component.frequency, pres.algebra) if surrogates \
                else component.frequency
            cos, sin = _rotation_scalars(frequency, to_rational(q), cyclotomic_field())
            if isinstance(cos, NumberFieldElement) or isinstance(sin, NumberFieldElement):
                raise UnsupportedAngleError("irrational rotation entries cannot be mixed with symbols")
            cos, sin = field.convert(cos), field.convert(sin)
        total = total + component.projector.convert(field).scale(scale * cos)
        total = total + component.generator.convert(field).scale(scale * sin)
    if not pres.N.is_zero():
        total = total * nilpotent_exp(pres.N).convert(field)
    return total


class LatticeCandidate(namedtuple("LatticeCandidate", ["presentation", "q", "matrix", "witness",
                                                       "symbolic_unipotent"])):
    """
    The subgroup Γ_{t̄} = exp(t̄X_k)^Z ⋉ (Zⁿ-conjugate) at t̄ = qπ.

    ``symbolic_unipotent`` marks matrices whose unipotent factor exp(t̄N) was replaced by the
    conjugate exp(N); characteristic and minimal polynomials are unaffected.
    """


def lattice_candidate(pres, q, exponentials=None, witness=None, order=24):
    if not isinstance(pres, AlmostAbelianPresentation):
        pres = AlmostAbelianPresentation(pres)
    q = to_rational(q)
    matrix = monodromy(pres, q, exponentials, order)
    flagged = bool(q) and not pres.N.is_zero()
    if flagged:
        logger.info("%s: unipotent factor of the monodromy taken up to conjugacy", pres.algebra.name)
    return LatticeCandidate(pres, q, matrix, witness, flagged)


def finite_rotation(pres, q, order=24):
    """exp(t̄·C_finite) on the ideal, over Q when its entries are rational."""
    q = to_rational(q)
    n = pres.n
    identity = Matrix.identity(n)
    field = cyclotomic_field(order)
    terms = [(QQ.one, identity)]
    for component in pres.components:
        if not component.is_rotation or component.is_irrational:
            continue
        cos, sin = _rotation_scalars(component.frequency, q, field)
        terms.append((cos - QQ.one, component.projector))
        terms.append((sin, component.generator))
    return _combine(terms, n)
