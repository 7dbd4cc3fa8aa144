"""
Free graded-commutative differential algebras Λ(V, d) truncated at a degree cap.

A monomial is an exponent tuple over the generator list (odd generators have exponent 0 or 1);
a polynomial is a dict ``{monomial: coefficient}``.  Products follow the generator order with
the Koszul sign of the odd generators that have to be moved.
"""
import logging
import re

from sympy.polys.domains import QQ

from ..errors import ModelError, ParseError
from ..exact import Matrix, to_rational, format_rational
from ..cohomology.complex import CochainAlgebra

logger = logging.getLogger(__name__)

_NAME = r"[A-Za-z][A-Za-z0-9_]*(?:\s*\^\s*\d+)?"
_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*((?:{0})(?:\s*\*\s*{0})*)?\s*".format(_NAME))


class FreeCdga(CochainAlgebra):
    """
    Λ(generators) with the differential given on generators, up to degree ``cap``.

    ``differentials`` maps generator names to polynomials, either as dicts or as strings like
    ``"x^2"`` or ``"A*p - 2*x*y"`` (factors multiplied in the written order).
    """

    def __init__(self, generators=(), differentials=None, cap=7, name=None, check=True):
        super().__init__()
        self.generators = tuple((str(n), int(d)) for n, d in generators)
        names = [n for n, _ in self.generators]
        if len(set(names)) != len(names):
            raise ModelError("duplicate generator names in {}".format(names))
        if any(d < 1 for _, d in self.generators):
            raise ModelError("generators must have positive degree")
        self.names = tuple(names)
        self.degrees = tuple(d for _, d in self.generators)
        self._position = {n: i for i, n in enumerate(names)}
        self.top = cap
        self.cap = cap
        self.name = name or "M"
        self.d_generators = {}
        for n, value in (differentials or {}).items():
            if n not in self._position:
                raise ModelError("differential given for unknown generator {!r}".format(n))
            poly = self.parse(value) if isinstance(value, str) else _clean(value)
            for monomial in poly:
                if self.monomial_degree(monomial) != self.degrees[self._position[n]] + 1:
                    raise ModelError("d{} has a term of the wrong degree".format(n))
            if poly:
                self.d_generators[n] = poly
        self._bases = {}
        self._index = {}
        if check:
            self._check_square_zero()

    def __repr__(self):
        return "FreeCdga({})".format(self.describe_model())

    # generators and monomials

    def degree_of(self, name):
        return self.degrees[self._position[name]]

    def is_odd(self, i):
        return self.degrees[i] % 2 == 1

    def monomial_degree(self, monomial):
        return sum(e * d for e, d in zip(monomial, self.degrees))

    def generator_monomial(self, name):
        e = [0] * len(self.generators)
        e[self._position[name]] = 1
        return tuple(e)

    def closed_names(self):
        return [n for n in self.names if n not in self.d_generators]

    def nonclosed_names(self):
        return [n for n in self.names if n in self.d_generators]

    def generator_counts(self):
        counts = {}
        for d in self.degrees:
            counts[d] = counts.get(d, 0) + 1
        return dict(sorted(counts.items()))

    def extend(self, generators, differentials=None, name=None):
        """A new algebra with extra generators appended (existing ones keep their order)."""
        diffs = {n: dict(p) for n, p in self.d_generators.items()}
        width = len(self.generators) + len(generators)
        for n, poly in diffs.items():
            diffs[n] = {m + (0,) * (width - len(m)): c for m, c in poly.items()}
        extended = FreeCdga(self.generators + tuple(generators), diffs, self.cap, name or self.name,
                            check=False)
        for n, value in (differentials or {}).items():
            poly = extended.parse(value) if isinstance(value, str) else _clean(value)
            poly = {m + (0,) * (width - len(m)): c for m, c in poly.items()}
            if any(extended.monomial_degree(m) != extended.degree_of(n) + 1 for m in poly):
                raise ModelError("d{} has a term of the wrong degree".format(n))
            if poly:
                extended.d_generators[n] = poly
        extended._check_square_zero()
        return extended

    def monomials(self, p):
        """Basis monomials of degree p, in a fixed order."""
        if p in self._bases:
            return self._bases[p]
        out = []
        n = len(self.generators)

        def walk(i, remaining, current):
            if i == n:
                if remaining == 0:
                    out.append(tuple(current))
                return
            d = self.degrees[i]
            top = 1 if self.is_odd(i) else remaining // d
            for e in range(min(top, remaining // d) + 1):
                current.append(e)
                walk(i + 1, remaining - e * d, current)
                current.pop()

        if p >= 0:
            walk(0, p, [])
        self._bases[p] = out
        self._index[p] = {m: i for i, m in enumerate(out)}
        return out

    def multiply_monomials(self, left, right):
        """(sign, monomial) of left·right; sign 0 when an odd generator repeats."""
        sign = 1
        odd_before = 0
        for i in range(len(left)):
            if self.is_odd(i):
                if left[i] and right[i]:
                    return 0, None
                if left[i] and odd_before % 2:
                    sign = -sign
                odd_before += right[i]
        return sign, tuple(a + b for a, b in zip(left, right))

    def multiply_polynomials(self, left, right):
        out = {}
        for m1, c1 in left.items():
            for m2, c2 in right.items():
                sign, m = self.multiply_monomials(m1, m2)
                if sign:
                    out[m] = out.get(m, QQ.zero) + (c1 * c2 if sign > 0 else -c1 * c2)
        return _clean(out)

    def factors(self, monomial):
        """The monomial as a list of generator indices, in order."""
        out = []
        for i, e in enumerate(monomial):
            out.extend([i] * e)
        return out

    def d_monomial(self, monomial):
        """d of a monomial by the Leibniz rule over its factor sequence."""
        factors = self.factors(monomial)
        zero = (0,) * len(self.generators)
        out = {}
        for r, i in enumerate(factors):
            name = self.names[i]
            if name not in self.d_generators:
                continue
            prefix = {zero: QQ.one}
            for j in factors[:r]:
                prefix = self._times_generator(prefix, j)
            term = self.multiply_polynomials(prefix, self.d_generators[name])
            for j in factors[r + 1:]:
                term = self._times_generator(term, j)
            degree_before = sum(self.degrees[j] for j in factors[:r])
            sign = -1 if degree_before % 2 else 1
            for m, c in term.items():
                out[m] = out.get(m, QQ.zero) + (c if sign > 0 else -c)
        return _clean(out)

    def _times_generator(self, poly, i):
        e = [0] * len(self.generators)
        e[i] = 1
        return self.multiply_polynomials(poly, {tuple(e): QQ.one})

    def d_polynomial(self, poly):
        out = {}
        for m, c in poly.items():
            for m2, c2 in self.d_monomial(m).items():
                out[m2] = out.get(m2, QQ.zero) + c * c2
        return _clean(out)

    def _check_square_zero(self):
        for name, poly in self.d_generators.items():
            if self.d_polynomial(poly):
                raise ModelError("d²{} ≠ 0 in {}".format(name, self.name))

    def is_minimal(self):
        """No generator has a linear term in its differential."""
        return all(sum(m) != 1 for poly in self.d_generators.values() for m in poly)

    # CochainAlgebra surface

    def dimension(self, p):
        if p < 0 or p > self.cap + 1:
            return 0
        return len(self.monomials(p))

    def label(self, p, i):
        return self.monomial_label(self.monomials(p)[i])

    def monomial_label(self, monomial):
        parts = []
        for name, e in zip(self.names, monomial):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("{}^{}".format(name, e))
        return "*".join(parts) if parts else "1"

    def _differential(self, p):
        rows = self.dimension(p + 1)
        self.monomials(p + 1)
        columns = []
        for m in self.monomials(p):
            column = [QQ.zero] * rows
            for m2, c in self.d_monomial(m).items():
                column[self._index[p + 1][m2]] += c
            columns.append(column)
        return Matrix.from_columns(columns, QQ, rows)

    def _multiply_basis(self, p, i, q, j):
        if p + q > self.cap + 1:
            return {}
        sign, m = self.multiply_monomials(self.monomials(p)[i], self.monomials(q)[j])
        if not sign:
            return {}
        self.monomials(p + q)
        return {self._index[p + q][m]: QQ.one if sign > 0 else -QQ.one}

    def vector(self, poly):
        """Coordinates of a homogeneous polynomial."""
        poly = _clean(poly)
        if not poly:
            raise ModelError("the zero polynomial has no degree; use zero(p)")
        degrees = {self.monomial_degree(m) for m in poly}
        if len(degrees) != 1:
            raise ModelError("inhomogeneous polynomial")
        p = degrees.pop()
        self.monomials(p)
        v = [QQ.zero] * self.dimension(p)
        for m, c in poly.items():
            v[self._index[p][m]] = c
        return p, tuple(v)

    def polynomial(self, p, vector):
        return {m: c for m, c in zip(self.monomials(p), vector) if c}

    def format_polynomial(self, poly):
        if not poly:
            return "0"
        out = []
        for m in sorted(poly, key=lambda m: [-e for e in m]):
            c = poly[m]
            label = self.monomial_label(m)
            if c == 1:
                out.append("+ " + label)
            elif c == -1:
                out.append("- " + label)
            else:
                text = format_rational(c)
                out.append(("- " + text[1:] if text.startswith("-") else "+ " + text) + "*" + label)
        joined = " ".join(out)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]

    def describe_model(self):
        """``Λ(A1, x2, b3), Db = x^2`` style summary."""
        gens = ", ".join("{}{}".format(n, d) for n, d in self.generators)
        diffs = ", ".join("D{} = {}".format(n, self.format_polynomial(self.d_generators[n]))
                          for n in self.names if n in self.d_generators)
        return "Λ({}){}".format(gens, ", " + diffs if diffs else ", D = 0")

    # parsing

    def parse(self, text):
        """Read ``"-2*A*x + y^2"``; factors are multiplied in the written order."""
        text = text.strip()
        if text in ("", "0"):
            return {}
        zero = (0,) * len(self.generators)
        total = {}
        pos = 0
        while pos < len(text):
            match = _TERM.match(text, pos)
            if not match or match.end() == pos:
                raise ParseError("cannot read polynomial term", 1, pos + 1)
            sign, coefficient, factors = match.groups()
            if pos and not sign:
                raise ParseError("expected + or -", 1, pos + 1)
            if not coefficient and not factors:
                raise ParseError("empty term", 1, pos + 1)
            value = to_rational(coefficient) if coefficient else QQ.one
            term = {zero: -value if sign == "-" else value}
            for item in (factors or "").split("*"):
                if not item.strip():
                    continue
                name, _, power = item.partition("^")
                name = name.strip()
                if name not in self._position:
                    raise ParseError("unknown generator {!r}".format(name), 1, pos + 1)
                for _ in range(int(power) if power.strip() else 1):
                    term = self._times_generator(term, self._position[name])
            for m, c in term.items():
                total[m] = total.get(m, QQ.zero) + c
            pos = match.end()
        return _clean(total)


def _clean(poly):
    return {tuple(m): to_rational(c) for m, c in poly.items() if c}


def free_cdga(spec, differentials=None, cap=7, name=None):
    """
    Build from a compact generator list: ``"A:1, x:2, b:3, y:3"`` or ``[("A", 1), ...]``.
    """
    if isinstance(spec, str):
        generators = []
        for item in spec.split(","):
            if not item.strip():
                continue
            n, _, d = item.partition(":")
            generators.append((n.strip(), int(d)))
    else:
        generators = list(spec)
    return FreeCdga(generators, differentials, cap, name)
