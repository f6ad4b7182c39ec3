"""Parser for basis certificate files.

The header is `basis l <l> field <n>` (`ℓ` and a bare `basis <l> field <n>`
are accepted too), followed by one derivation per line as l comma-separated
polynomials in x1, ..., xl.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

from free_arrangements.derivation import Derivation
from free_arrangements.errors import ParseError
from free_arrangements.field import CycloField, field_make
from free_arrangements.parser import Parser, content_lines, parse_polynomial
from free_arrangements.polynomial import MultiPoly


logger: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisFile:
    """Contents of a basis certificate file."""

    field: CycloField
    """Coefficient field."""
    dim: int
    """Number of variables."""
    derivations: tuple[Derivation, ...]
    """The derivations, in file order."""


class BasisParser(Parser[BasisFile]):
    """Parser for basis certificate files.

    Examples:
        >>> parser = BasisParser()
        >>> basis = parser.parse("basis l 2 field 1\\nx1, 0\\n0, x2\\n")
        >>> basis.dim, [str(theta) for theta in basis.derivations]
        (2, ['x1, 0', '0, x2'])
        >>> print(parser.format(basis.field, basis.dim, basis.derivations), end="")
        basis l 2 field 1
        x1, 0
        0, x2

    """

    def __str__(self) -> str:
        """Get a string representation of the parser."""
        return "Basis Parser"

    def _header(self, number: int, text: str) -> tuple[int, int]:
        parts: list[str] = text.split()
        if parts[:1] != ["basis"]:
            raise ParseError(f"expected a `basis` header, got {text!r}", line=number)
        if len(parts) == 5 and parts[1] in ("l", "ℓ"):
            parts = ["basis", *parts[2:]]
        if len(parts) != 4 or parts[2] != "field":
            raise ParseError(f"expected `basis l <l> field <n>`, got {text!r}", line=number)
        try:
            dim, conductor = int(parts[1]), int(parts[3])
        except ValueError:
            raise ParseError(f"non-integer values in header {text!r}", line=number) from None
        if dim < 0 or conductor < 1:
            raise ParseError(f"invalid header values in {text!r}", line=number)
        return dim, conductor

    def parse(self, text: str) -> BasisFile:
        """Parse a basis certificate.

        Args:
            text: File contents.

        Returns:
            The parsed basis.

        Raises:
            ParseError: On a malformed header or polynomial, or a wrong number of components.

        """
        lines: list[tuple[int, str]] = list(content_lines(text))
        if not lines:
            raise ParseError("missing `basis` header")
        dim, conductor = self._header(*lines[0])
        field: CycloField = field_make(conductor)
        derivations: list[Derivation] = []
        for number, line in lines[1:]:
            parts: list[str] = line.split(",")
            if len(parts) != dim:
                raise ParseError(f"expected {dim} components, got {len(parts)}", line=number)
            polys: list[MultiPoly] = [parse_polynomial(p, field, dim, line=number) for p in parts]
            derivations.append(Derivation.from_polys(polys))
        logger.debug(f"Parsed {len(derivations)} derivations in {dim} variables over {field}")
        return BasisFile(field, dim, tuple(derivations))

    def format(self, field: CycloField, dim: int, derivations: Sequence[Derivation]) -> str:
        """Write derivations as a basis certificate.

        Args:
            field: Coefficient field.
            dim: Number of variables.
            derivations: Derivations to write.

        Returns:
            The file contents, ending with a newline.

        """
        lines: list[str] = [f"basis l {dim} field {field.conductor}"]
        lines.extend(str(theta) for theta in derivations)
        return "\n".join(lines) + "\n"
