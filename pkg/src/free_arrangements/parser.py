"""Abstract parser class and the scalar and polynomial syntax shared by file formats."""

import logging
import os
import re
import sys
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Iterator

import sympy as sp
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from free_arrangements.errors import ParseError
from free_arrangements.field import CycloField, CycloNum
from free_arrangements.polynomial import Monomial, MultiPoly


logger: logging.Logger = logging.getLogger(__name__)


_TRANSFORMATIONS = standard_transformations + (implicit_multiplication, convert_xor)
_Z: sp.Symbol = sp.Symbol("z")
# Characters parse_expr may see.
_ALLOWED: re.Pattern[str] = re.compile(r"[0-9xz+\-*/^()\s]*")


def _expression(text: str, symbols: dict[str, sp.Symbol], line: int | None) -> sp.Expr:
    if not text.strip():
        raise ParseError("empty expression", line=line)
    if not _ALLOWED.fullmatch(text):
        raise ParseError(f"unexpected characters in {text!r}", line=line)
    try:
        expr: sp.Expr = parse_expr(text, local_dict=dict(symbols), transformations=_TRANSFORMATIONS)
    except Exception as e:
        raise ParseError(f"malformed expression {text!r}: {e}", line=line) from e
    unknown: set[str] = {str(s) for s in getattr(expr, "free_symbols", set())} - set(symbols)
    if unknown:
        raise ParseError(f"unknown symbols {sorted(unknown)} in {text!r}", line=line)
    return expr


def _rational(value: sp.Expr) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _z_coefficients(terms: dict[int, Fraction]) -> list[Fraction]:
    coeffs: list[Fraction] = [Fraction(0)] * (max(terms, default=0) + 1)
    for k, c in terms.items():
        coeffs[k] = c
    return coeffs


def parse_scalar(text: str, field: CycloField, *, line: int | None = None) -> CycloNum:
    """Parse a scalar such as `3/4` or `1-2z+z^2`, where z is the root of unity of the field.

    Args:
        text: Scalar text.
        field: Field the scalar belongs to.
        line: Line number for error messages.

    Returns:
        The field element.

    Raises:
        ParseError: If the text is not a polynomial in z with rational coefficients.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> str(parse_scalar("1-2z+z^2", field_make(5)))
        '1-2z+z^2'
        >>> str(parse_scalar("z^2", field_make(3)))
        '-1-z'
        >>> str(parse_scalar("(1/2)z", field_make(4)))
        '(1/2)z'

    """
    expr: sp.Expr = _expression(text, {"z": _Z}, line)
    try:
        poly: sp.Poly = sp.Poly(expr, _Z, domain="QQ")
        terms: dict[int, Fraction] = {k: _rational(c) for (k,), c in poly.as_dict().items()}
    except Exception as e:
        raise ParseError(f"{text!r} is not a polynomial in z with rational coefficients", line=line) from e
    return CycloNum(field, _z_coefficients(terms))


def parse_polynomial(text: str, field: CycloField, nvars: int, *, line: int | None = None) -> MultiPoly:
    """Parse a polynomial in x1, ..., xl with scalar coefficients.

    Args:
        text: Polynomial text, e.g. `x1^2*x2 - (1+z)*x3`.
        field: Coefficient field.
        nvars: Number of variables.
        line: Line number for error messages.

    Returns:
        The polynomial.

    Raises:
        ParseError: If the text is not such a polynomial.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> str(parse_polynomial("x1^2*x2 - 2*x1*x2^2 + (1/3)x2^3", field_make(1), 2))
        'x1^2*x2 - 2*x1*x2^2 + 1/3*x2^3'
        >>> str(parse_polynomial("(1+z)*x1", field_make(3), 1))
        '(1+z)*x1'

    """
    xs: list[sp.Symbol] = [sp.Symbol(f"x{i + 1}") for i in range(nvars)]
    symbols: dict[str, sp.Symbol] = {str(x): x for x in xs}
    symbols["z"] = _Z
    expr: sp.Expr = _expression(text, symbols, line)
    try:
        poly: sp.Poly = sp.Poly(expr, *xs, _Z, domain="QQ")
        grouped: dict[Monomial, dict[int, Fraction]] = {}
        for exps, c in poly.as_dict().items():
            grouped.setdefault(tuple(exps[:nvars]), {})[exps[nvars]] = _rational(c)
    except Exception as e:
        raise ParseError(f"{text!r} is not a polynomial in x1..x{nvars}", line=line) from e
    return MultiPoly(field, nvars, {m: CycloNum(field, _z_coefficients(t)) for m, t in grouped.items()})


def content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Iterate over non-blank, non-comment lines with their 1-based numbers."""
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped: str = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped


class Parser[T](ABC):
    """Abstract parser of a text file format."""

    @abstractmethod
    def parse(self, text: str) -> T:
        """Parse text into a value.

        Args:
            text: Input text.

        Returns:
            The parsed value.

        Raises:
            ParseError: If the text is malformed.

        """
        pass

    @abstractmethod
    def __str__(self) -> str:
        """Get a string representation of the parser.

        Returns:
            String representation of the parser.

        """
        pass

    def parse_file(self, file: str | os.PathLike) -> T:
        """Parse a file; `-` reads standard input.

        Args:
            file: Path of the file to parse.

        Returns:
            The parsed value.

        """
        if str(file) == "-":
            logger.debug(f"{self}: reading standard input")
            return self.parse(sys.stdin.read())
        logger.debug(f"{self}: reading {file}")
        with open(file, "r") as f:
            return self.parse(f.read())
