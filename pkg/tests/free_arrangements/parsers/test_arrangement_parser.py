import doctest

import pytest

from free_arrangements import Arrangement, ArrangementParser, ParseError, field_make, monomial


def test_parse() -> None:
    parser: ArrangementParser = ArrangementParser()
    A: Arrangement = parser.parse("# Q(z3)\nfield 3\ndim 2\n1 -z\n1 1+z\n\n1 -1\n")
    assert A.key == monomial(3, 3, 2).key
    assert str(parser) == "Arrangement Parser"
    empty: Arrangement = parser.parse("field 1\ndim 4\n")
    assert (len(empty), empty.dim) == (0, 4)


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("field 1\ndim 2\n1 0 0\n", 3),
        ("field 1\ndim 2\n0 0\n", 3),
        ("field 1\ndim 2\n1 w\n", 3),
        ("dim 2\nfield 1\n", 1),
        ("field 0\ndim 2\n", 1),
        ("field 1\ndim two\n", 2),
    ],
)
def test_malformed(text: str, line: int) -> None:
    with pytest.raises(ParseError) as info:
        ArrangementParser().parse(text)
    assert info.value.line == line


def test_missing_header() -> None:
    with pytest.raises(ParseError):
        ArrangementParser().parse("field 1\n")
    with pytest.raises(ParseError):
        ArrangementParser().parse("")


def test_duplicates_merged(caplog) -> None:
    A: Arrangement = ArrangementParser().parse("field 4\ndim 2\n1 z\nz -1\n0 1\n")
    assert len(A) == 2
    assert A.collapsed == 1
    assert A.field == field_make(4)
    assert "Merged 1" in caplog.text


def test_docstring() -> None:
    import free_arrangements.parsers.arrangement

    results: doctest.TestResults = doctest.testmod(free_arrangements.parsers.arrangement, verbose=True)
    assert results.failed == 0
