"""Exception hierarchy shared by every module of the package."""


class GdcError(Exception):
    """Base class for all errors raised by gdc."""


class DimensionMismatchError(GdcError, ValueError):
    """Exponent or weight vectors of incompatible length."""


class ContextMismatchError(GdcError, ValueError):
    """Polynomials or ideals living in different rings were combined."""


class ZeroPolynomialError(GdcError, ValueError):
    """An operation that is undefined on the zero polynomial received it."""


class ParseError(GdcError, ValueError):
    """Malformed polynomial, order spec or ideal file.

    ``line`` and ``column`` are 1-based; ``line`` is None for single-line input.
    """

    def __init__(self, message, column=None, line=None):
        self.message = message
        self.column = column
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = (", ".join(where) + ": ") if where else ""
        super().__init__(prefix + message)


class SingularMatrixError(GdcError, ValueError):
    """A coordinate change matrix is not invertible."""


class BudgetExceededError(GdcError, RuntimeError):
    """The reduction-step budget of a Groebner basis computation ran out."""


class UnitIdealError(GdcError, ValueError):
    """A proper ideal was required but the unit ideal was given."""


class NotHomogeneousError(GdcError, ValueError):
    """A graded (homogeneous) input was required."""


class VerificationRefused(GdcError, ValueError):
    """Input cannot be mechanically verified, so no verdict is produced."""


class InternalError(GdcError, RuntimeError):
    """A self-check failed; indicates a bug rather than bad input."""
