import doctest

import pytest

from free_arrangements import MultiPoly, ParseError, field_make
from free_arrangements.parser import content_lines, parse_polynomial, parse_scalar


def test_parse_scalar() -> None:
    Q = field_make(1)
    assert parse_scalar("3/4", Q) == parse_scalar("6/8", Q)
    assert parse_scalar("-2", Q) == -2
    K = field_make(7)
    assert parse_scalar("z^7", K) == 1
    assert parse_scalar("2z", K) == K.generator() * 2
    assert parse_scalar("z*(1+z)", K) == K.generator() + K.generator() * K.generator()
    with pytest.raises(ParseError):
        parse_scalar("x1", K)
    with pytest.raises(ParseError):
        parse_scalar("1/z", K)
    with pytest.raises(ParseError, match="line 4"):
        parse_scalar("(", K, line=4)
    with pytest.raises(ParseError):
        parse_scalar("", K)


def test_parse_polynomial() -> None:
    Q = field_make(1)
    x1, x2 = MultiPoly.variable(Q, 2, 0), MultiPoly.variable(Q, 2, 1)
    assert parse_polynomial("(x1 - x2)^2", Q, 2) == x1 * x1 - 2 * x1 * x2 + x2 * x2
    assert parse_polynomial("0", Q, 2).is_zero()
    assert parse_polynomial("2 x1 x2", Q, 2) == 2 * x1 * x2
    with pytest.raises(ParseError):
        parse_polynomial("x3", Q, 2)
    with pytest.raises(ParseError):
        parse_polynomial("x1^(1/2)", Q, 2)
    with pytest.raises(ParseError):
        parse_polynomial("y", Q, 2)


@pytest.mark.parametrize(
    "text",
    ["__import__('os').system('true')", "x1.conjugate()", "lambda: 1", "1.5", "x1, x2", "Symbol('x1')"],
)
def test_rejects_foreign_syntax(text: str) -> None:
    with pytest.raises(ParseError, match="unexpected characters"):
        parse_polynomial(text, field_make(1), 2)
    with pytest.raises(ParseError, match="line 7"):
        parse_scalar(text, field_make(3), line=7)


def test_content_lines() -> None:
    text: str = "# comment\n\nfield 1\n  dim 2  \n"
    assert list(content_lines(text)) == [(3, "field 1"), (4, "dim 2")]


def test_docstring() -> None:
    import free_arrangements.parser

    results: doctest.TestResults = doctest.testmod(free_arrangements.parser, verbose=True)
    assert results.failed == 0
