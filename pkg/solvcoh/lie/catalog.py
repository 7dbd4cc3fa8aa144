"""
Built-in catalog of the eleven six-dimensional unimodular almost abelian Lie algebras that
are not completely solvable.

Each entry declares its parameters, their defaults and constraints, which parameters are
surrogates for transcendental or irrational reals, the eigenvalues of the acting matrix as
symbolic expressions (for the genericity certificate), and what is known about the modified
algebra and lattices.
"""
import logging
from collections import namedtuple
from itertools import product

import sympy

from ..errors import ConstraintError, UnknownAlgebraError
from ..exact import to_rational, format_rational
from ..exact.rational import to_sympy
from .algebra import LieAlgebra

logger = logging.getLogger(__name__)

MAX_WEIGHT_SUM = 6


class GenericityReport(namedtuple("GenericityReport", ["generic", "mismatches", "checked"])):
    """
    ``mismatches`` lists the coefficient vectors ε whose weight sum Σ ε_i λ_i vanishes at the
    surrogate values but not identically, or the other way round.
    """

    def __bool__(self):
        return self.generic


class CatalogEntry:
    """
    A parametrised family of Lie algebras.

    ``brackets`` maps 1-based pairs to lists of ``(coefficient expression, basis index)``;
    coefficient expressions are strings in the parameter names.  ``derived`` gives parameters
    that are solved from the others when omitted.
    """

    def __init__(self, name, dim, params, defaults, brackets, constraints=(), derived=None,
                 transcendental=(), irrational=(), weights=(), title=None, modified=None,
                 lattices=None):
        self.name = name
        self.dim = dim
        self.params = tuple(params)
        self.defaults = dict(defaults)
        self.bracket_spec = brackets
        self.constraints = tuple(constraints)
        self.derived = dict(derived or {})
        self.transcendental = tuple(transcendental)
        self.irrational = tuple(irrational)
        self.weights = tuple(weights)
        self.title = title or name
        self.modified = modified
        self.lattices = dict(lattices or {})
        self._symbols = {p: sympy.Symbol(p) for p in self.params}

    def __repr__(self):
        return "CatalogEntry({})".format(self.name)

    def resolve(self, params=None):
        """Complete ``params`` with defaults and derived values; returns a name → QQ dict."""
        given = {k: to_rational(v) for k, v in (params or {}).items()}
        unknown = set(given) - set(self.params)
        if unknown:
            raise ConstraintError(self.name, "unknown parameters {}".format(sorted(unknown)), given)
        values = dict(given)
        for name in self.params:
            if name in values or name in self.derived:
                continue
            values[name] = to_rational(self.defaults[name])
        for name, expr in self.derived.items():
            if name not in values:
                substituted = sympy.sympify(expr).subs({self._symbols[k]: to_sympy(v) for k, v in values.items()})
                values[name] = to_rational(substituted)
        return values

    def check_constraints(self, values):
        subs = {self._symbols[k]: to_sympy(v) for k, v in values.items()}
        for constraint in self.constraints:
            verdict = sympy.sympify(constraint, locals=self._symbols).subs(subs)
            if verdict is not sympy.true:
                raise ConstraintError(self.name, constraint, values)

    def build(self, params=None, irrational=None):
        values = self.resolve(params)
        self.check_constraints(values)
        subs = {self._symbols[k]: to_sympy(v) for k, v in values.items()}
        brackets = {}
        for (i, j), terms in self.bracket_spec.items():
            vector = {}
            for coefficient, k in terms:
                c = to_rational(sympy.sympify(coefficient, locals=self._symbols).subs(subs))
                if c:
                    vector[k - 1] = vector.get(k - 1, 0) + c
            brackets[(i - 1, j - 1)] = vector
        metadata = {
            "catalog": self.name,
            "title": self.title,
            "transcendental": [p for p in self.transcendental if values.get(p)],
            "modified": self.modified,
            "lattices": self.lattices,
        }
        algebra = LieAlgebra(self.dim, brackets, name=self.name, params=values,
                             irrational=self.irrational if irrational is None else irrational,
                             metadata=metadata)
        logger.debug("built %s with %s", self.name,
                     ", ".join("{}={}".format(k, format_rational(v)) for k, v in sorted(values.items())))
        return algebra

    def symbolic_weights(self, values):
        """Eigenvalues of the acting matrix with transcendental parameters left symbolic."""
        subs = {}
        for name, value in values.items():
            if name in self.transcendental and value:
                continue
            subs[self._symbols[name]] = to_sympy(value)
        derived = {self._symbols[k]: sympy.sympify(v, locals=self._symbols)
                   for k, v in self.derived.items()}
        out = []
        for w in self.weights:
            expr = sympy.sympify(w, locals=self._symbols).subs(derived).subs(subs)
            out.append(sympy.expand(expr))
        return out

    def genericity(self, values=None):
        """
        Compare which weight sums Σ ε_i λ_i vanish, ε ∈ {−1, 0, 1}^n with |ε|₁ ≤ 6, for the
        symbolic weights and for the surrogate values.
        """
        values = self.resolve(values)
        symbolic = self.symbolic_weights(values)
        numeric = [sympy.expand(sympy.sympify(w, locals=self._symbols).subs(
            {self._symbols[k]: to_sympy(v) for k, v in values.items()})) for w in self.weights]
        mismatches = []
        checked = 0
        for eps in product((-1, 0, 1), repeat=len(self.weights)):
            weight = sum(abs(e) for e in eps)
            if weight == 0 or weight > MAX_WEIGHT_SUM:
                continue
            checked += 1
            s = sympy.expand(sum(e * w for e, w in zip(eps, symbolic)))
            n = sympy.expand(sum(e * w for e, w in zip(eps, numeric)))
            if (s == 0) != (n == 0):
                mismatches.append(eps)
        return GenericityReport(not mismatches, mismatches, checked)


def _entry(name, dim, params, defaults, brackets, **kwargs):
    return CatalogEntry(name, dim, params, defaults, brackets, **kwargs)


CATALOG = {}


def register(entry):
    CATALOG[entry.name] = entry
    return entry


register(_entry(
    "g6.8", 6, ("a", "b", "c", "p"), {"b": 3, "c": 1, "p": 0},
    {(1, 6): [("a", 1)], (2, 6): [("b", 2)], (3, 6): [("c", 3)],
     (4, 6): [("p", 4), ("-1", 5)], (5, 6): [("1", 4), ("p", 5)]},
    constraints=("Eq(a + b + c + 2*p, 0)", "Abs(c) > 0", "Abs(c) <= Abs(b)", "Abs(b) <= Abs(a)"),
    derived={"a": "-b - c - 2*p"},
    transcendental=("b", "c"),
    weights=("a", "b", "c", "p + I", "p - I"),
    title="g_{6.8}^{a,b,c,p}",
    modified="g4.5 + R2",
    lattices={"2": "lattice for suitable b, c solving the integrality system (p = 0)"},
))

register(_entry(
    "g6.9", 6, ("a", "b", "p"), {"b": 1, "p": 0},
    {(1, 6): [("a", 1)], (2, 6): [("b", 2)], (3, 6): [("1", 2), ("b", 3)],
     (4, 6): [("p", 4), ("-1", 5)], (5, 6): [("1", 4), ("p", 5)]},
    constraints=("Eq(a + 2*b + 2*p, 0)", "Ne(a, 0)"),
    derived={"a": "-2*b - 2*p"},
    weights=("a", "b", "b", "p + I", "p - I"),
    title="g_{6.9}^{a,b,p}",
    lattices={"2": "no lattice"},
))

register(_entry(
    "g6.10", 6, ("a",), {"a": 0},
    {(1, 6): [("a", 1)], (2, 6): [("1", 1), ("a", 2)], (3, 6): [("1", 2), ("a", 3)],
     (4, 6): [("-3*a/2", 4), ("-1", 5)], (5, 6): [("1", 4), ("-3*a/2", 5)]},
    weights=("a", "a", "a", "-3*a/2 + I", "-3*a/2 - I"),
    title="g_{6.10}^{a,-3a/2}",
    modified="g4.1 + R2",
    lattices={"2": "lattice for a = 0", "1": "lattice for a = 0", "1/2": "lattice for a = 0",
              "1/3": "lattice for a = 0"},
))

register(_entry(
    "g6.11", 6, ("a", "p", "q", "s"), {"p": 0, "q": 1, "s": 3},
    {(1, 6): [("a", 1)], (2, 6): [("p", 2), ("-1", 3)], (3, 6): [("1", 2), ("p", 3)],
     (4, 6): [("q", 4), ("-s", 5)], (5, 6): [("s", 4), ("q", 5)]},
    constraints=("Eq(a + 2*p + 2*q, 0)", "Ne(a*s, 0)"),
    derived={"a": "-2*p - 2*q"},
    transcendental=("q",),
    irrational=("s",),
    weights=("a", "p + I", "p - I", "q + s*I", "q - s*I"),
    title="g_{6.11}^{a,p,q,s}",
    modified="g4.6^{-2k,k} + R2",
    lattices={"2": "lattice for p = 0 and suitable q, s (s irrational)",
              "2*s2": "no lattice when s = s1/s2 is rational"},
))

register(_entry(
    "g6.12", 6, ("p",), {"p": 1},
    {(1, 6): [("-4*p", 1)], (2, 6): [("p", 2), ("-1", 3)], (3, 6): [("1", 2), ("p", 3)],
     (4, 6): [("1", 2), ("p", 4), ("-1", 5)], (5, 6): [("1", 3), ("1", 4), ("p", 5)]},
    constraints=("Ne(p, 0)",),
    weights=("-4*p", "p + I", "p - I", "p + I", "p - I"),
    title="g_{6.12}^{-4p,p}",
    lattices={"2": "no lattice"},
))

register(_entry(
    "g5.13+R", 6, ("q", "r"), {"q": 0, "r": 1},
    {(1, 5): [("1", 1)], (2, 5): [("-1 - 2*q", 2)], (3, 5): [("q", 3), ("-r", 4)],
     (4, 5): [("r", 3), ("q", 4)]},
    constraints=("Ne(q, -1/2)", "Ne(r, 0)", "q >= -1", "q <= 0"),
    weights=("1", "-1 - 2*q", "q + r*I", "q - r*I", "0"),
    title="g_{5.13}^{-1-2q,q,r} + R",
    lattices={"2": "no lattice"},
))

register(_entry(
    "g5.14+R", 6, (), {},
    {(2, 5): [("1", 1)], (3, 5): [("-1", 4)], (4, 5): [("1", 3)]},
    weights=("0", "0", "I", "-I", "0"),
    title="g_{5.14}^0 + R",
    modified="g3.1 + R3",
))

register(_entry(
    "g5.17+R", 6, ("p", "r"), {"p": 0, "r": 1},
    {(1, 5): [("p", 1), ("-1", 2)], (2, 5): [("1", 1), ("p", 2)],
     (3, 5): [("-p", 3), ("-r", 4)], (4, 5): [("r", 3), ("-p", 4)]},
    constraints=("Ne(r, 0)",),
    transcendental=("p",),
    weights=("p + I", "p - I", "-p + r*I", "-p - r*I", "0"),
    title="g_{5.17}^{p,-p,r} + R",
    modified="R6 (p = 0) / g5.7^{1,-1,-1} + R (p != 0)",
))

register(_entry(
    "g5.18+R", 6, (), {},
    {(1, 5): [("-1", 2)], (2, 5): [("1", 1)], (3, 5): [("1", 1), ("-1", 4)],
     (4, 5): [("1", 2), ("1", 3)]},
    weights=("I", "-I", "I", "-I", "0"),
    title="g_{5.18}^0 + R",
    modified="g5.1 + R",
))

register(_entry(
    "g4.6+R2", 6, ("p",), {"p": 1},
    {(1, 4): [("-2*p", 1)], (2, 4): [("p", 2), ("-1", 3)], (3, 4): [("1", 2), ("p", 3)]},
    constraints=("p > 0",),
    weights=("-2*p", "p + I", "p - I", "0", "0"),
    title="g_{4.6}^{-2p,p} + R2",
    lattices={"2": "no lattice"},
))

register(_entry(
    "g3.5+R3", 6, (), {},
    {(1, 3): [("-1", 2)], (2, 3): [("1", 1)]},
    weights=("I", "-I", "0", "0", "0"),
    title="g_{3.5}^0 + R3",
    modified="R6",
))


def catalog_names():
    return sorted(CATALOG)


def catalog_entry(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownAlgebraError("unknown catalog algebra {!r}; known: {}".format(
            name, ", ".join(catalog_names())))


def catalog_build(name, params=None, irrational=None):
    """Build the catalog algebra ``name`` with ``params`` (missing ones take their defaults)."""
    return catalog_entry(name).build(params, irrational=irrational)
