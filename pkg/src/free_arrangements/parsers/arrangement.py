"""Parser for the arrangement text format.

The format is a `field <n>` line, a `dim <l>` line and then one hyperplane
per line as l whitespace-separated scalars. Lines starting with `#` are
comments.
"""

import logging

from free_arrangements.arrangement import Arrangement, arrangement_make
from free_arrangements.errors import ArrangementError, ParseError
from free_arrangements.field import CycloField, CycloNum, field_make
from free_arrangements.parser import Parser, content_lines, parse_scalar


logger: logging.Logger = logging.getLogger(__name__)


def _header(lines: list[tuple[int, str]], position: int, keyword: str) -> int:
    if position >= len(lines):
        raise ParseError(f"missing `{keyword}` header")
    number, text = lines[position]
    parts: list[str] = text.split()
    if len(parts) != 2 or parts[0] != keyword:
        raise ParseError(f"expected `{keyword} <integer>`, got {text!r}", line=number)
    try:
        value: int = int(parts[1])
    except ValueError:
        raise ParseError(f"`{keyword}` needs an integer, got {parts[1]!r}", line=number) from None
    return value


class ArrangementParser(Parser[Arrangement]):
    """Parser for arrangement files.

    Examples:
        >>> parser = ArrangementParser()
        >>> A = parser.parse("field 1\\ndim 2\\n1 0\\n2 0\\n0 1\\n")
        >>> len(A), A.collapsed
        (2, 1)
        >>> print(parser.format(A), end="")
        field 1
        dim 2
        1 0
        0 1

    """

    def __str__(self) -> str:
        """Get a string representation of the parser."""
        return "Arrangement Parser"

    def parse(self, text: str) -> Arrangement:
        """Parse an arrangement file.

        Args:
            text: File contents.

        Returns:
            The canonical arrangement; proportional duplicates are merged with a warning.

        Raises:
            ParseError: On a malformed header or scalar, a wrong arity or a zero form.

        """
        lines: list[tuple[int, str]] = list(content_lines(text))
        conductor: int = _header(lines, 0, "field")
        if conductor < 1:
            raise ParseError(f"unknown field {conductor}", line=lines[0][0])
        dim: int = _header(lines, 1, "dim")
        if dim < 0:
            raise ParseError(f"negative dimension {dim}", line=lines[1][0])
        field: CycloField = field_make(conductor)

        forms: list[list[CycloNum]] = []
        for number, line in lines[2:]:
            tokens: list[str] = line.split()
            if len(tokens) != dim:
                raise ParseError(f"expected {dim} scalars, got {len(tokens)}", line=number)
            row: list[CycloNum] = [parse_scalar(t, field, line=number) for t in tokens]
            if not any(row):
                raise ParseError("zero linear form", line=number)
            forms.append(row)
        try:
            arrangement: Arrangement = arrangement_make(field, dim, forms)
        except ArrangementError as e:
            raise ParseError(str(e)) from e
        if arrangement.collapsed:
            logger.warning(f"Merged {arrangement.collapsed} proportional duplicate hyperplanes")
        logger.debug(f"Parsed {len(arrangement)} hyperplanes in dimension {dim} over {field}")
        return arrangement

    def format(self, arrangement: Arrangement) -> str:
        """Write an arrangement in the file format.

        Args:
            arrangement: Arrangement to write.

        Returns:
            The file contents, ending with a newline.

        """
        lines: list[str] = [f"field {arrangement.field.conductor}", f"dim {arrangement.dim}"]
        for h in arrangement:
            lines.append(" ".join(str(c) for c in h.coeffs))
        return "\n".join(lines) + "\n"
