import doctest

import pytest

from free_arrangements import (
    Arrangement,
    Family,
    FamilySpec,
    PreconditionError,
    boolean,
    braid,
    coxeter_b,
    coxeter_d,
    family,
    field_make,
    monomial,
    parse_arrangement_file,
    random_arrangement,
    write_arrangement,
)


@pytest.mark.parametrize(
    ("r", "p", "dim", "count"),
    [(1, 1, 3, 3), (2, 1, 3, 9), (2, 2, 3, 6), (3, 1, 2, 5), (3, 3, 3, 9), (4, 2, 2, 6), (4, 4, 3, 12)],
)
def test_monomial_sizes(r: int, p: int, dim: int, count: int) -> None:
    A: Arrangement = monomial(r, p, dim)
    assert len(A) == count
    assert A.collapsed == 0
    assert A.field.conductor == (r if r > 2 else 1)


def test_families() -> None:
    assert len(boolean(4)) == 4
    assert len(braid(5)) == 10
    assert coxeter_b(3).key == monomial(2, 1, 3).key
    assert coxeter_d(3).key == monomial(2, 2, 3).key
    assert braid(1).dim == 1 and len(braid(1)) == 0
    with pytest.raises(PreconditionError):
        coxeter_b(1)
    with pytest.raises(PreconditionError):
        braid(0)
    with pytest.raises(PreconditionError):
        monomial(4, 3, 2)


def test_family_spec() -> None:
    assert family(FamilySpec(Family.BRAID, n=4)).key == braid(4).key
    assert family(FamilySpec(Family.COXETER_B, n=2)).key == coxeter_b(2).key
    spec: FamilySpec = FamilySpec(Family.RANDOM, l=3, count=4, seed=11, conductor=5)
    assert family(spec) == random_arrangement(field_make(5), 3, 4, seed=11)
    assert Family("coxeterD") is Family.COXETER_D
    with pytest.raises(PreconditionError):
        FamilySpec(Family.MONOMIAL, r=3, l=2)
    with pytest.raises(PreconditionError):
        FamilySpec(Family.RANDOM, l=3)
    with pytest.raises(PreconditionError):
        FamilySpec(Family.BOOLEAN)


def test_random_arrangement() -> None:
    A: Arrangement = random_arrangement(field_make(1), 3, 6, seed=1)
    assert len(A) == 6
    assert A != random_arrangement(field_make(1), 3, 6, seed=2)
    with pytest.raises(PreconditionError):
        random_arrangement(field_make(1), 1, 2)


@pytest.mark.parametrize("A", [braid(3), monomial(3, 1, 2), monomial(5, 5, 2)])
def test_file_round_trip(A: Arrangement, tmp_path) -> None:
    path = tmp_path / "arrangement.txt"
    path.write_text(write_arrangement(A))
    assert parse_arrangement_file(path) == A


def test_docstring() -> None:
    import free_arrangements.catalog

    results: doctest.TestResults = doctest.testmod(free_arrangements.catalog, verbose=True)
    assert results.failed == 0
