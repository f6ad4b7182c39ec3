"""Verdict of a decision command."""

import logging
from enum import StrEnum


logger: logging.Logger = logging.getLogger(__name__)


class Verdict(StrEnum):
    """Verdict of a decision command.

    Examples:
        >>> Verdict.of(True), Verdict.of(False).exit_code
        (<Verdict.POSITIVE: 'positive'>, 1)

    """

    POSITIVE = "positive"
    """The property holds."""
    NEGATIVE = "negative"
    """The property does not hold."""
    ERROR = "error"
    """Usage or input error; no verdict."""

    @classmethod
    def of(cls, holds: bool) -> "Verdict":
        """Get the verdict of a boolean answer."""
        return cls.POSITIVE if holds else cls.NEGATIVE

    @property
    def exit_code(self) -> int:
        """Process exit status of the verdict."""
        return {Verdict.POSITIVE: 0, Verdict.NEGATIVE: 1, Verdict.ERROR: 2}[self]
