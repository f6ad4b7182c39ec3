"""Exact linear algebra over cyclotomic fields."""

import logging
from typing import Iterable, Sequence

from free_arrangements.field import CycloField, CycloNum


logger: logging.Logger = logging.getLogger(__name__)


type Row = tuple[CycloNum, ...]
"""A dense row vector."""

type SparseRow = dict[int, CycloNum]
"""A sparse row vector mapping column indices to nonzero entries."""


def rref(field: CycloField, rows: Iterable[Sequence[CycloNum]], ncols: int) -> tuple[tuple[Row, ...], tuple[int, ...]]:
    """Compute the reduced row echelon form of a matrix.

    Zero rows are dropped, every pivot is 1 and rows are sorted by pivot column.

    Args:
        field: Field of the entries.
        rows: Rows of the matrix.
        ncols: Number of columns.

    Returns:
        The nonzero rows of the reduced row echelon form and their pivot columns.

    """
    matrix: list[list[CycloNum]] = [[field(c) for c in row] for row in rows]
    pivots: list[int] = []
    r: int = 0
    for col in range(ncols):
        pivot_row: int | None = None
        for i in range(r, len(matrix)):
            if matrix[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        inv: CycloNum = matrix[r][col].inverse()
        matrix[r] = [c * inv for c in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][col]:
                factor: CycloNum = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(col)
        r += 1
        if r == len(matrix):
            break
    return tuple(tuple(row) for row in matrix[:r]), tuple(pivots)


def rank(field: CycloField, rows: Iterable[Sequence[CycloNum]], ncols: int) -> int:
    """Compute the rank of a matrix.

    Args:
        field: Field of the entries.
        rows: Rows of the matrix.
        ncols: Number of columns.

    Returns:
        The rank.

    """
    return len(rref(field, rows, ncols)[1])


def nullspace(field: CycloField, rows: Iterable[Sequence[CycloNum]], ncols: int) -> list[Row]:
    """Compute a basis of the right kernel of a matrix.

    One basis vector per non-pivot column, with a 1 in that column.

    Args:
        field: Field of the entries.
        rows: Rows of the matrix.
        ncols: Number of columns.

    Returns:
        Basis of the kernel.

    """
    reduced, pivots = rref(field, rows, ncols)
    basis: list[Row] = []
    for free in range(ncols):
        if free in pivots:
            continue
        vector: list[CycloNum] = [field.zero()] * ncols
        vector[free] = field.one()
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free]
        basis.append(tuple(vector))
    return basis


class SparseEchelon:
    """Incrementally maintained echelon form of sparse rows.

    Used for large, sparse systems such as the degreewise conditions on derivations.
    """

    _pivots: dict[int, SparseRow]
    """Pivot column to the (normalized) row owning it."""

    def __init__(self) -> None:
        """Initialize an empty echelon form."""
        self._pivots = {}

    def __len__(self) -> int:
        """Get the rank of the rows added so far."""
        return len(self._pivots)

    def add(self, row: SparseRow) -> bool:
        """Add a row, reducing it against the current pivots.

        Args:
            row: Row to add; it is not modified.

        Returns:
            True if the row increased the rank.

        """
        work: SparseRow = {c: v for c, v in row.items() if v}
        while work:
            col: int = min(work)
            pivot: SparseRow | None = self._pivots.get(col)
            if pivot is None:
                inv: CycloNum = work[col].inverse()
                self._pivots[col] = {c: v * inv for c, v in work.items()}
                return True
            factor: CycloNum = work[col]
            for c, v in pivot.items():
                updated: CycloNum = work[c] - factor * v if c in work else -(factor * v)
                if updated:
                    work[c] = updated
                else:
                    work.pop(c, None)
        return False


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    """Compute the rank of a sparse matrix.

    Args:
        rows: Sparse rows.

    Returns:
        The rank.

    """
    echelon: SparseEchelon = SparseEchelon()
    for row in rows:
        echelon.add(row)
    return len(echelon)
