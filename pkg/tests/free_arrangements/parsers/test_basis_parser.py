import doctest

import pytest

from free_arrangements import BasisFile, BasisParser, ParseError, braid, field_make, is_free, saito_check


def test_header_variants() -> None:
    parser: BasisParser = BasisParser()
    for header in ("basis l 2 field 1", "basis ℓ 2 field 1", "basis 2 field 1"):
        basis: BasisFile = parser.parse(f"{header}\nx1, x2\n1, 1\n")
        assert basis.dim == 2
        assert len(basis.derivations) == 2


def test_round_trip() -> None:
    A = braid(3)
    report = is_free(A)
    assert report.basis is not None
    parser: BasisParser = BasisParser()
    parsed: BasisFile = parser.parse(parser.format(A.field, A.dim, report.basis))
    assert parsed.field == A.field
    assert parsed.derivations == report.basis
    assert saito_check(parsed.derivations, A)[0]


def test_cyclotomic() -> None:
    basis: BasisFile = BasisParser().parse("basis l 2 field 3\nx1, (1+z)*x2\nx1^2, z x2^2\n")
    assert basis.field == field_make(3)
    assert [theta.pdeg for theta in basis.derivations] == [1, 2]


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("derivations 2 field 1\n", 1),
        ("basis l 2 field\n", 1),
        ("basis l two field 1\n", 1),
        ("basis l 2 field 1\nx1\n", 2),
        ("# c\nbasis l 2 field 1\nx1, x3\n", 3),
    ],
)
def test_malformed(text: str, line: int) -> None:
    with pytest.raises(ParseError) as info:
        BasisParser().parse(text)
    assert info.value.line == line


def test_docstring() -> None:
    import free_arrangements.parsers.basis

    results: doctest.TestResults = doctest.testmod(free_arrangements.parsers.basis, verbose=True)
    assert results.failed == 0
