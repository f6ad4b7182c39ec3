"""Exceptions raised by the arrangement toolkit."""

import logging


logger: logging.Logger = logging.getLogger(__name__)


class ArrangementError(Exception):
    """Base class of all errors raised by the toolkit."""


class FieldMismatchError(ArrangementError, TypeError):
    """Scalars or polynomials over different cyclotomic fields were combined."""


class ZeroFormError(ArrangementError, ValueError):
    """A linear form or vector that must be nonzero is zero."""


class DimensionError(ArrangementError, ValueError):
    """Arity, rank, ring or count mismatch."""


class NotHomogeneousError(ArrangementError, ValueError):
    """A graded operation received non-homogeneous data."""


class LatticeError(ArrangementError, ValueError):
    """A subspace is not in the intersection lattice, or a hyperplane is not in the arrangement."""


class ChainError(ArrangementError, ValueError):
    """An inductive chain does not match its arrangement."""


class PreconditionError(ArrangementError, ValueError):
    """The preconditions of an operation do not hold."""


class CertificateError(ArrangementError, ArithmeticError):
    """A computed basis failed its own Saito certificate."""


class ParseError(ArrangementError, ValueError):
    """Malformed input text.

    Examples:
        >>> str(ParseError("wrong arity", line=3))
        'line 3: wrong arity'
        >>> str(ParseError("empty input"))
        'empty input'

    """

    line: int | None
    """1-based line number of the offending input line, if known."""

    def __init__(self, message: str, *, line: int | None = None) -> None:
        """Initialize the parse error.

        Args:
            message: Description of the problem.
            line: 1-based line number of the offending input line.

        """
        super().__init__(message)
        self.message: str = message
        self.line = line

    def __str__(self) -> str:
        """Get the message, prefixed with the line number when known."""
        if self.line is None:
            return self.message
        return f"line {self.line}: {self.message}"
