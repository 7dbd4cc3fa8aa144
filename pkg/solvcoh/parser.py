"""
Reader for the algebra file format::

    # g_{3.5}^0 + R3
    dim 6;
    [1,3] = -1*2;
    [2,3] = 1*1;

Statements end with ``;`` and may share a line; ``#`` starts a comment.  Indices are
1-based, coefficients are integer or ``p/q`` literals and ``param NAME = RATIONAL;`` records
parameter values.  Brackets that are not listed are zero.
"""
import logging
import re

from .errors import ParseError
from .exact import to_rational
from .lie import LieAlgebra

logger = logging.getLogger(__name__)

_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_DIM = re.compile(r"dim\s+(\d+)$")
_PARAM = re.compile(r"param\s+([A-Za-z_]\w*)\s*=\s*(" + _RATIONAL + r")$")
_BRACKET = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*")
_FIRST_TERM = re.compile(r"\s*(" + _RATIONAL + r")\s*\*\s*(\d+)\s*")
_NEXT_TERM = re.compile(r"\s*([+-])\s*(" + _RATIONAL + r")\s*\*\s*(\d+)\s*")


def _statements(text):
    """Yield ``(statement, line, column)`` with comments removed; positions are 1-based."""
    buffer, start = [], None
    for line_number, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        for column, char in enumerate(line, 1):
            if char == ";":
                if start is None:
                    raise ParseError("empty statement", line_number, column)
                yield "".join(buffer).strip(), start[0], start[1]
                buffer, start = [], None
                continue
            if start is None:
                if char.isspace():
                    continue
                start = (line_number, column)
            buffer.append(char)
        if start is not None:
            buffer.append(" ")
    if start is not None:
        raise ParseError("missing ';' after statement", start[0], start[1])


def _terms(body, line, column):
    """Parse ``q1*k1 + q2*k2 ...`` into ``[(coefficient, index)]``."""
    terms = []
    match = _FIRST_TERM.match(body)
    if match is None:
        raise ParseError("expected 'coefficient*index'", line, column)
    terms.append((to_rational(match.group(1)), int(match.group(2))))
    position = match.end()
    while position < len(body):
        match = _NEXT_TERM.match(body, position)
        if match is None:
            raise ParseError("expected '+' or '-' before the next term", line, column + position)
        coefficient = to_rational(match.group(2))
        if match.group(1) == "-":
            coefficient = -coefficient
        terms.append((coefficient, int(match.group(3))))
        position = match.end()
    return terms


def parse_algebra(text, name=None):
    """
    Parse an algebra file into a :class:`~solvcoh.lie.LieAlgebra`.

    Raises :class:`~solvcoh.errors.ParseError` with the statement position for syntax errors,
    repeated brackets and indices out of range, and :class:`~solvcoh.errors.JacobiError` with the
    failing triple when the brackets do not define a Lie algebra.
    """
    dim = None
    params = {}
    brackets = {}
    for statement, line, column in _statements(text):
        match = _DIM.match(statement)
        if match:
            if dim is not None:
                raise ParseError("dimension declared twice", line, column)
            dim = int(match.group(1))
            continue
        match = _PARAM.match(statement)
        if match:
            params[match.group(1)] = to_rational(match.group(2))
            continue
        match = _BRACKET.match(statement)
        if match is None:
            raise ParseError("unrecognised statement {!r}".format(statement), line, column)
        if dim is None:
            raise ParseError("bracket before 'dim N;'", line, column)
        i, j = int(match.group(1)), int(match.group(2))
        if not (1 <= i < j <= dim):
            raise ParseError("bracket [{},{}] needs 1 <= i < j <= {}".format(i, j, dim), line, column)
        if (i - 1, j - 1) in brackets:
            raise ParseError("bracket [{},{}] given twice".format(i, j), line, column)
        vector = {}
        for coefficient, k in _terms(statement[match.end():], line, column + match.end()):
            if not 1 <= k <= dim:
                raise ParseError("basis index {} outside 1..{}".format(k, dim), line, column)
            vector[k - 1] = vector.get(k - 1, 0) + coefficient
        brackets[(i - 1, j - 1)] = vector
    if dim is None:
        raise ParseError("missing 'dim N;' header", 1, 1)
    algebra = LieAlgebra(dim, brackets, name=name, params=params)
    logger.debug("parsed %r with %d nonzero brackets", algebra, len(algebra.brackets))
    return algebra


def print_algebra(algebra):
    """The algebra file text of ``algebra``; :func:`parse_algebra` reads it back unchanged."""
    return algebra.to_text()


def read_algebra(path):
    with open(path, encoding="utf-8") as f:
        return parse_algebra(f.read(), name=path)
