"""Constructors for reflection arrangements and arrangement files."""

import logging
import os
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from free_arrangements.arrangement import Arrangement, LinearForm, arrangement_make
from free_arrangements.errors import PreconditionError
from free_arrangements.field import CycloField, CycloNum, field_make
from free_arrangements.parsers.arrangement import ArrangementParser


logger: logging.Logger = logging.getLogger(__name__)


class Family(StrEnum):
    """Arrangement families known to the catalog."""

    BOOLEAN = "boolean"
    """Coordinate hyperplanes."""
    BRAID = "braid"
    """Reflection arrangement of the symmetric group."""
    COXETER_B = "coxeterB"
    """Coxeter type B, the monomial group G(2,1,l)."""
    COXETER_D = "coxeterD"
    """Coxeter type D, the monomial group G(2,2,l)."""
    MONOMIAL = "monomial"
    """Reflection arrangement of the monomial group G(r,p,l)."""
    RANDOM = "random"
    """Random central arrangement with small coefficients."""


@dataclass(frozen=True)
class FamilySpec:
    """A family tag with its parameters.

    Examples:
        >>> len(family(FamilySpec(Family.MONOMIAL, r=3, p=3, l=3)))
        9
        >>> FamilySpec(Family.MONOMIAL, r=4, p=3, l=2)
        Traceback (most recent call last):
        ...
        free_arrangements.errors.PreconditionError: monomial(4, 3, 2): p must divide r

    """

    family: Family
    """Family tag."""
    n: int | None = None
    """Dimension for boolean, braid, coxeterB and coxeterD."""
    r: int | None = None
    """Order of the roots of unity for monomial."""
    p: int | None = None
    """Divisor of r for monomial."""
    l: int | None = None
    """Dimension for monomial and random."""
    count: int | None = None
    """Number of hyperplanes for random."""
    seed: int = 0
    """Seed for random."""
    conductor: int = 1
    """Field conductor for random."""

    def __post_init__(self) -> None:
        match self.family:
            case Family.MONOMIAL:
                if self.r is None or self.p is None or self.l is None:
                    raise PreconditionError("monomial needs r, p and l")
                if self.r < 1 or self.p < 1 or self.l < 1:
                    raise PreconditionError(f"monomial({self.r}, {self.p}, {self.l}): parameters must be positive")
                if self.r % self.p:
                    raise PreconditionError(f"monomial({self.r}, {self.p}, {self.l}): p must divide r")
            case Family.RANDOM:
                if self.l is None or self.count is None:
                    raise PreconditionError("random needs l and count")
            case _:
                if self.n is None or self.n < 1:
                    raise PreconditionError(f"{self.family} needs a positive n")


def boolean(dim: int) -> Arrangement:
    """Get the coordinate hyperplanes of a dim-dimensional space over Q."""
    field: CycloField = field_make(1)
    return arrangement_make(field, dim, [[1 if i == j else 0 for j in range(dim)] for i in range(dim)])


def braid(n: int) -> Arrangement:
    """Get the braid arrangement x_i - x_j, i < j, in n variables over Q.

    Examples:
        >>> [len(braid(n)) for n in (2, 3, 4)]
        [1, 3, 6]
        >>> str(braid(3))
        '{x1 - x2, x1 - x3, x2 - x3}'

    """
    if n < 1:
        raise PreconditionError(f"braid({n}): n must be positive")
    forms: list[list[int]] = []
    for i in range(n):
        for j in range(i + 1, n):
            row: list[int] = [0] * n
            row[i], row[j] = 1, -1
            forms.append(row)
    return arrangement_make(field_make(1), n, forms)


def _root_of_unity(field: CycloField, r: int, k: int) -> CycloNum:
    if r == 1:
        return field.one()
    if r == 2:
        return field.one() if k % 2 == 0 else -field.one()
    return field.root(k)


def monomial(r: int, p: int, dim: int) -> Arrangement:
    """Get the reflection arrangement of the monomial group G(r,p,l).

    The hyperplanes are x_i - z^k x_j for i < j and 0 <= k < r, preceded by
    the coordinate hyperplanes when p < r. The field is Q(z_r), or Q for r <= 2.

    Raises:
        PreconditionError: If p does not divide r or a parameter is not positive.

    Examples:
        >>> str(monomial(2, 1, 2))
        '{x1, x2, x1 - x2, x1 + x2}'
        >>> str(monomial(3, 3, 2))
        '{x1 - x2, x1 + (-z)*x2, x1 + (1+z)*x2}'

    """
    FamilySpec(Family.MONOMIAL, r=r, p=p, l=dim)
    field: CycloField = field_make(r if r > 2 else 1)
    zero, one = field.zero(), field.one()
    forms: list[list[CycloNum]] = []
    if p < r:
        forms.extend([one if i == j else zero for j in range(dim)] for i in range(dim))
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(r):
                row: list[CycloNum] = [zero] * dim
                row[i], row[j] = one, -_root_of_unity(field, r, k)
                forms.append(row)
    return arrangement_make(field, dim, forms)


def coxeter_b(dim: int) -> Arrangement:
    """Get the Coxeter arrangement of type B, i.e. G(2,1,l)."""
    if dim < 2:
        raise PreconditionError(f"coxeterB({dim}): rank must be at least 2")
    return monomial(2, 1, dim)


def coxeter_d(dim: int) -> Arrangement:
    """Get the Coxeter arrangement of type D, i.e. G(2,2,l)."""
    if dim < 2:
        raise PreconditionError(f"coxeterD({dim}): rank must be at least 2")
    return monomial(2, 2, dim)


def random_arrangement(field: CycloField, dim: int, count: int, seed: int = 0, bound: int = 2) -> Arrangement:
    """Draw a central arrangement of distinct hyperplanes with small coefficients.

    Coefficients are integers in [-bound, bound], or a + b z with such a and b
    over a proper cyclotomic field.

    Args:
        field: Coefficient field.
        dim: Dimension of the ambient space.
        count: Number of hyperplanes.
        seed: Seed of the random generator.
        bound: Bound on the coefficients.

    Returns:
        The arrangement.

    Raises:
        PreconditionError: If not enough distinct hyperplanes can be drawn.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> A = random_arrangement(field_make(3), 3, 5, seed=7)
        >>> len(A), A == random_arrangement(field_make(3), 3, 5, seed=7)
        (5, True)

    """
    rng: np.random.Generator = np.random.default_rng(seed)
    z: CycloNum = field.generator()
    forms: dict[LinearForm, None] = {}
    attempts: int = 0
    while len(forms) < count:
        attempts += 1
        if attempts > 1000 * max(count, 1):
            raise PreconditionError(f"cannot draw {count} distinct hyperplanes in dimension {dim}")
        a: list[int] = [int(v) for v in rng.integers(-bound, bound + 1, size=dim)]
        if field.is_rational:
            row: list[CycloNum] = [field(v) for v in a]
        else:
            b: list[int] = [int(v) for v in rng.integers(-bound, bound + 1, size=dim)]
            row = [field(x) + z * y for x, y in zip(a, b)]
        if not any(row):
            continue
        forms.setdefault(LinearForm.make(field, row), None)
    logger.debug(f"Drew {count} hyperplanes in {attempts} attempts")
    return arrangement_make(field, dim, forms)


def family(spec: FamilySpec) -> Arrangement:
    """Build the arrangement of a family specification."""
    match spec.family:
        case Family.BOOLEAN:
            return boolean(spec.n)
        case Family.BRAID:
            return braid(spec.n)
        case Family.COXETER_B:
            return coxeter_b(spec.n)
        case Family.COXETER_D:
            return coxeter_d(spec.n)
        case Family.MONOMIAL:
            return monomial(spec.r, spec.p, spec.l)
        case Family.RANDOM:
            return random_arrangement(field_make(spec.conductor), spec.l, spec.count, spec.seed)


def parse_arrangement_file(file: str | os.PathLike) -> Arrangement:
    """Read an arrangement file; `-` reads standard input."""
    return ArrangementParser().parse_file(file)


def write_arrangement(arrangement: Arrangement) -> str:
    """Format an arrangement in the file format."""
    return ArrangementParser().format(arrangement)
