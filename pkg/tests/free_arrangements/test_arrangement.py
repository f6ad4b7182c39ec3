import doctest

import pytest

from free_arrangements import (
    Arrangement,
    CycloField,
    DimensionError,
    FieldMismatchError,
    LatticeError,
    LinearForm,
    MultiPoly,
    Restriction,
    Subspace,
    ZeroFormError,
    arrangement_make,
    boolean,
    braid,
    field_make,
)


Q: CycloField = field_make(1)


def test_arrangement_make() -> None:
    A: Arrangement = arrangement_make(Q, 2, [[1, 0], [2, 0], [0, 1]])
    assert len(A) == 2
    assert A.collapsed == 1
    assert str(A) == "{x1, x2}"
    assert len(arrangement_make(Q, 3, [])) == 0
    assert str(arrangement_make(Q, 2, [[1, -1]])) == "{x1 - x2}"
    with pytest.raises(ZeroFormError):
        arrangement_make(Q, 2, [[0, 0]])
    with pytest.raises(DimensionError):
        arrangement_make(Q, 2, [[1, 0, 0]])


def test_canonical_forms() -> None:
    K: CycloField = field_make(3)
    z = K.generator()
    form: LinearForm = LinearForm.make(K, [z, K.one()])
    assert form.coeffs[0] == 1
    assert form.coeffs[1] == z.inverse()
    assert arrangement_make(K, 2, [[z, 1], [1, z * z]]).collapsed == 1


def test_defining_polynomial() -> None:
    x1, x2, x3 = (MultiPoly.variable(Q, 3, i) for i in range(3))
    assert boolean(2).defining_polynomial() == MultiPoly.variable(Q, 2, 0) * MultiPoly.variable(Q, 2, 1)
    q: MultiPoly = braid(3).defining_polynomial()
    assert q == (x1 - x2) * (x1 - x3) * (x2 - x3)
    assert q.homogeneous_degree == 3
    assert arrangement_make(Q, 2, []).defining_polynomial() == 1


def test_localize() -> None:
    A: Arrangement = braid(3)
    line: Subspace = A.subspace_of([0, 1])
    assert len(A.localize(line)) == 3
    assert A.localize(A[1]).hyperplanes == (A[1],)
    assert len(A.localize(Subspace.whole(Q, 3))) == 0
    with pytest.raises(LatticeError):
        A.localize(Subspace.from_forms(Q, 3, [[1, 0, 0]]))


def test_restrict() -> None:
    A: Arrangement = braid(3)
    R: Restriction = A.restrict(A[0])
    assert len(R.arrangement) == 1
    assert R.arrangement.dim == 2
    assert R.coordinates == (1, 2)
    assert R.preimages == ((1, 2),)
    B: Restriction = boolean(2).restrict(LinearForm.make(Q, [1, 0]))
    assert B.arrangement.dim == 1
    assert len(B.arrangement) == 1
    assert A.restrict(Subspace.whole(Q, 3)).arrangement == A
    assert len(braid(4).restrict(braid(4)[0]).arrangement) == 3


def test_restrict_substitution() -> None:
    A: Arrangement = braid(4)
    R: Restriction = A.restrict(A.subspace_of([0, 5]))
    images: list[MultiPoly] = R.substitution_polys()
    for i, h in enumerate(A):
        restricted: MultiPoly = h.to_poly().substitute(images)
        if A.subspace_of([0, 5]).contains_form(h):
            assert restricted.is_zero()
        else:
            assert LinearForm.make(Q, [restricted.coefficient(m) for m in _units(R.arrangement.dim)]) in R.arrangement
            assert any(i in p for p in R.preimages)


def _units(dim: int) -> list[tuple[int, ...]]:
    return [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]


def test_delete_and_add() -> None:
    A: Arrangement = braid(3)
    deleted: Arrangement = A.delete([1, -1, 0])
    assert len(deleted) == 2
    assert deleted.add(A[0]).key == A.key
    single: Arrangement = arrangement_make(Q, 2, [[1, 1]])
    assert len(single.delete(single[0])) == 0
    with pytest.raises(LatticeError):
        A.delete([1, 1, 0])
    with pytest.raises(LatticeError):
        A.add([2, -2, 0])
    with pytest.raises(FieldMismatchError):
        A.add(LinearForm.make(field_make(3), [1, 0, 0]))


def test_essentialize() -> None:
    E = braid(3).essentialize()
    assert (E.arrangement.dim, E.drop) == (2, 1)
    assert braid(3).essential_rank == 2
    assert boolean(2).essentialize().drop == 0
    assert arrangement_make(Q, 2, []).essentialize().drop == 2


def test_key_ignores_order() -> None:
    A: Arrangement = arrangement_make(Q, 2, [[1, 0], [0, 1]])
    B: Arrangement = arrangement_make(Q, 2, [[0, 1], [1, 0]])
    assert A != B
    assert A.key == B.key
    assert arrangement_make(field_make(2), 2, [[1, 0], [0, 1]]).key != A.key


def test_subspace() -> None:
    X: Subspace = Subspace.from_forms(Q, 3, [[1, -1, 0], [0, 1, -1]])
    assert X.rank == 2
    assert X.dimension == 1
    assert X.coordinates == (2,)
    assert X.is_contained_in(Subspace.from_forms(Q, 3, [[1, 0, -1]]))
    assert str(Subspace.whole(Q, 2)) == "V"


def test_docstring() -> None:
    import free_arrangements.arrangement

    results: doctest.TestResults = doctest.testmod(free_arrangements.arrangement, verbose=True)
    assert results.failed == 0
