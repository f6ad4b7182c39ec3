"""Parsers for the arrangement and basis file formats."""

from free_arrangements.parsers.arrangement import ArrangementParser
from free_arrangements.parsers.basis import BasisFile, BasisParser


__all__: list[str] = [
    "ArrangementParser",
    "BasisFile",
    "BasisParser",
]
