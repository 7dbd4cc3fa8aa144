"""
Exterior forms on a Lie algebra and the Chevalley-Eilenberg differential.

A p-form is a sparse map from strictly increasing 0-based multi-indices to coefficients;
``a145`` in output stands for α¹∧α⁴∧α⁵.
"""
import re

from sympy.polys.domains import QQ

from ..errors import ParseError
from ..exact import to_rational, format_rational

_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?a([0-9.]+)\s*")


def sort_with_sign(indices):
    """Sort ``indices`` by adjacent transpositions; returns (sign, sorted tuple), sign 0 on repeats."""
    items = list(indices)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b:
            return 0, None
    return sign, tuple(items)


def multi_index_label(indices):
    """``(0, 3, 4)`` → ``a145``; indices past 9 are separated by dots."""
    if not indices:
        return "1"
    if all(i < 9 for i in indices):
        return "a" + "".join(str(i + 1) for i in indices)
    return "a" + ".".join(str(i + 1) for i in indices)


def parse_label(label):
    body = label.strip()
    if not body.startswith("a"):
        raise ValueError("not a form label: {!r}".format(label))
    body = body[1:]
    parts = body.split(".") if "." in body else list(body)
    return tuple(int(part) - 1 for part in parts)


class ExteriorForm:
    """Homogeneous element of Λᵖg*."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        cleaned = {}
        for indices, coefficient in (terms or {}).items():
            if len(indices) != degree:
                raise ValueError("multi-index {} in a {}-form".format(indices, degree))
            sign, key = sort_with_sign(indices)
            if not sign or not coefficient:
                continue
            value = cleaned.get(key, 0) + (coefficient if sign > 0 else -coefficient)
            if value:
                cleaned[key] = value
            else:
                cleaned.pop(key, None)
        self.terms = cleaned

    @classmethod
    def basis(cls, *indices, coefficient=QQ.one):
        return cls(len(indices), {tuple(indices): coefficient})

    @classmethod
    def unit(cls):
        return cls(0, {(): QQ.one})

    @classmethod
    def parse(cls, text):
        """
        Read forms written like ``a16 + a23 - 2*a45`` (1-based indices).

        Raises :class:`ParseError` with the column of the first unreadable character.
        """
        terms = {}
        degree = None
        pos = 0
        text = text.strip()
        while pos < len(text):
            match = _TERM.match(text, pos)
            if not match or match.end() == pos:
                raise ParseError("cannot read form term", 1, pos + 1)
            sign, coefficient, label = match.groups()
            value = to_rational(coefficient) if coefficient else QQ.one
            if sign == "-":
                value = -value
            indices = parse_label("a" + label)
            if degree is None:
                degree = len(indices)
            elif degree != len(indices):
                raise ParseError("inhomogeneous form", 1, pos + 1)
            sign_, key = sort_with_sign(indices)
            if sign_:
                terms[key] = terms.get(key, QQ.zero) + value * sign_
            pos = match.end()
        if degree is None:
            raise ParseError("empty form", 1, 1)
        return cls(degree, terms)

    def __repr__(self):
        return "ExteriorForm({})".format(self)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for key in sorted(self.terms):
            c = self.terms[key]
            label = multi_index_label(key)
            if c == 1:
                out.append("+ " + label)
            elif c == -1:
                out.append("- " + label)
            else:
                text = format_rational(c) if isinstance(c, QQ.dtype) else "({})".format(c)
                if text.startswith("-"):
                    out.append("- {}*{}".format(text[1:], label))
                else:
                    out.append("+ {}*{}".format(text, label))
        joined = " ".join(out)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]

    def __eq__(self, other):
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if other.degree != self.degree and self.terms and other.terms:
            raise ValueError("cannot add a {}-form and a {}-form".format(self.degree, other.degree))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return ExteriorForm(self.degree if self.terms else other.degree, terms)

    def __neg__(self):
        return ExteriorForm(self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return ExteriorForm(self.degree, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def wedge(self, other):
        terms = {}
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                sign, key = sort_with_sign(left + right)
                if not sign:
                    continue
                value = a * b
                terms[key] = terms.get(key, 0) + (value if sign > 0 else -value)
        return ExteriorForm(self.degree + other.degree, terms)

    __xor__ = wedge


def one_form_differentials(g):
    """dα^k = −Σ_{i<j} c_ij^k α^{ij}, as a list of 2-forms indexed by k."""
    terms = [dict() for _ in range(g.dim)]
    for (i, j), vector in g.brackets.items():
        for k, c in vector.items():
            terms[k][(i, j)] = terms[k].get((i, j), QQ.zero) - c
    return [ExteriorForm(2, t) for t in terms]


def differential_of_monomial(indices, one_forms):
    """d(α^{i1}∧…∧α^{ip}) from the differentials of the 1-forms, by the Leibniz rule."""
    terms = {}
    for r, k in enumerate(indices):
        head, tail = indices[:r], indices[r + 1:]
        sign_r = -1 if r % 2 else 1
        for (i, j), c in one_forms[k].terms.items():
            sign, key = sort_with_sign(head + (i, j) + tail)
            if not sign:
                continue
            value = c if sign * sign_r > 0 else -c
            terms[key] = terms.get(key, QQ.zero) + value
    return terms


def ce_differential(g, form):
    """The Chevalley-Eilenberg differential, with dα(X, Y) = −α([X, Y])."""
    if form.degree > g.dim:
        raise ValueError("{}-form on a {}-dimensional algebra".format(form.degree, g.dim))
    one_forms = one_form_differentials(g)
    terms = {}
    for indices, coefficient in form.terms.items():
        for key, c in differential_of_monomial(indices, one_forms).items():
            terms[key] = terms.get(key, 0) + coefficient * c
    return ExteriorForm(form.degree + 1, terms)
