"""
Exception hierarchy.

Library code raises these; the command line frontend turns them into warnings and a
nonzero exit status.
"""


class SolvcohError(Exception):
    """Base class for every error raised by solvcoh."""


class PreconditionError(SolvcohError):
    pass


class DimensionError(SolvcohError):
    pass


class ConstraintError(SolvcohError):
    """A catalog parameter value violates the entry's schema."""

    def __init__(self, name, constraint, values):
        self.name = name
        self.constraint = constraint
        self.values = dict(values)
        super().__init__(
            "parameters {} violate constraint '{}' of {}".format(
                _format_values(self.values), constraint, name))


class UnknownAlgebraError(SolvcohError):
    pass


class ParseError(SolvcohError):
    """Syntax error in an algebra file; line and column are 1-based."""

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__("line {}, column {}: {}".format(line, column, message))


class JacobiError(SolvcohError):

    def __init__(self, triple, message=None):
        self.triple = tuple(triple)
        super().__init__(message or "Jacobi identity fails for the triple {}".format(self.triple))


class UnsupportedFactorError(SolvcohError):
    pass


class TranscendentalEntryError(SolvcohError):
    pass


class UnsupportedAngleError(SolvcohError):
    pass


class UnsupportedFieldError(SolvcohError):
    pass


class ZeroDenominatorError(SolvcohError, ZeroDivisionError):
    pass


class ZeroPolynomialError(SolvcohError):
    pass


class ActionError(SolvcohError):
    pass


class UndefinedMasseyProductError(SolvcohError):
    pass


class ModelError(SolvcohError):
    pass


def _format_values(values):
    return ", ".join("{}={}".format(k, v) for k, v in sorted(values.items()))
