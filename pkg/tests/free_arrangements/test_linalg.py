import doctest
import random

import sympy as sp

from free_arrangements import CycloField, CycloNum, field_make
from free_arrangements.linalg import SparseEchelon, nullspace, rank, rref, sparse_rank


def test_rref() -> None:
    Q: CycloField = field_make(1)
    rows, pivots = rref(Q, [[Q(2), Q(4), Q(0)], [Q(1), Q(2), Q(1)], [Q(3), Q(6), Q(1)]], 3)
    assert pivots == (0, 2)
    assert rows == ((1, 2, 0), (0, 0, 1))


def test_nullspace() -> None:
    K: CycloField = field_make(3)
    z: CycloNum = K.generator()
    matrix: list[list[CycloNum]] = [[K.one(), -z, K.zero()], [K.zero(), K.one(), z]]
    kernel = nullspace(K, matrix, 3)
    assert len(kernel) == 1
    for row in matrix:
        assert not sum((a * b for a, b in zip(row, kernel[0])), K.zero())


def test_rank_against_sympy() -> None:
    rng: random.Random = random.Random(5)
    Q: CycloField = field_make(1)
    for _ in range(20):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
        values: list[list[int]] = [[rng.randint(-2, 2) for _ in range(ncols)] for _ in range(nrows)]
        expected: int = sp.Matrix(values).rank()
        assert rank(Q, [[Q(v) for v in row] for row in values], ncols) == expected
        sparse = [{j: Q(v) for j, v in enumerate(row) if v} for row in values]
        assert sparse_rank(sparse) == expected


def test_sparse_echelon() -> None:
    Q: CycloField = field_make(1)
    echelon: SparseEchelon = SparseEchelon()
    assert echelon.add({0: Q(1), 3: Q(2)})
    assert echelon.add({3: Q(1)})
    assert not echelon.add({0: Q(2)})
    assert not echelon.add({})
    assert len(echelon) == 2


def test_docstring() -> None:
    import free_arrangements.linalg

    results: doctest.TestResults = doctest.testmod(free_arrangements.linalg, verbose=True)
    assert results.failed == 0
