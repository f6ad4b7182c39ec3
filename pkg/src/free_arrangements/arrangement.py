"""Central hyperplane arrangements, flats, restriction and localization."""

import logging
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from free_arrangements.errors import DimensionError, FieldMismatchError, LatticeError, ZeroFormError
from free_arrangements.field import CycloField, CycloNum, Scalar
from free_arrangements.linalg import rref
from free_arrangements.polynomial import MultiPoly, product


logger: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearForm:
    """A nonzero linear form whose first nonzero coefficient is 1.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> str(LinearForm.make(Q, [0, 2, -2]))
        'x2 - x3'
        >>> LinearForm.make(Q, [2, 0]) == LinearForm.make(Q, [-1, 0])
        True

    """

    field: CycloField
    """Coefficient field."""
    coeffs: tuple[CycloNum, ...]
    """One coefficient per variable."""

    @classmethod
    def make(cls, field: CycloField, coeffs: Sequence[Scalar]) -> "LinearForm":
        """Create the canonical representative of a form.

        Args:
            field: Coefficient field.
            coeffs: Coefficients, not all zero.

        Returns:
            The form scaled so its first nonzero coefficient is 1.

        Raises:
            ZeroFormError: If all coefficients vanish.

        """
        values: list[CycloNum] = [field(c) for c in coeffs]
        lead: CycloNum | None = next((c for c in values if c), None)
        if lead is None:
            raise ZeroFormError(f"zero linear form {tuple(str(c) for c in values)}")
        if lead != 1:
            inv: CycloNum = lead.inverse()
            values = [c * inv for c in values]
        return cls(field, tuple(values))

    @property
    def dim(self) -> int:
        """Number of variables."""
        return len(self.coeffs)

    @property
    def pivot(self) -> int:
        """Index of the first nonzero coefficient."""
        return next(i for i, c in enumerate(self.coeffs) if c)

    def __call__(self, point: Sequence[Scalar]) -> CycloNum:
        """Evaluate the form at a vector."""
        if len(point) != self.dim:
            raise DimensionError(f"point of length {len(point)} for a form in {self.dim} variables")
        total: CycloNum = self.field.zero()
        for c, v in zip(self.coeffs, point):
            total = total + c * v
        return total

    def to_poly(self) -> MultiPoly:
        """Get the form as a homogeneous polynomial of degree 1."""
        return MultiPoly.linear(self.field, self.coeffs)

    @property
    def sort_key(self) -> tuple:
        """Deterministic key for sorting forms."""
        return tuple(c.coeffs for c in self.coeffs)

    def __str__(self) -> str:
        return str(self.to_poly())


@dataclass(frozen=True)
class Subspace:
    """A linear subspace cut out by linear forms, stored as a reduced row echelon matrix.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> X = Subspace.from_forms(Q, 3, [[1, -1, 0], [0, 1, -1], [1, 0, -1]])
        >>> X.rank, X.dimension, str(X)
        (2, 1, 'x1 - x3 = x2 - x3 = 0')
        >>> X.contains_form(LinearForm.make(Q, [1, 0, -1]))
        True

    """

    field: CycloField
    """Coefficient field."""
    ambient: int
    """Dimension of the ambient space."""
    rows: tuple[tuple[CycloNum, ...], ...]
    """Rows of the reduced row echelon form."""
    pivots: tuple[int, ...]
    """Pivot column of each row."""

    @classmethod
    def from_forms(
        cls, field: CycloField, ambient: int, forms: Iterable["LinearForm | Sequence[Scalar]"]
    ) -> "Subspace":
        """Create the common zero set of linear forms.

        Args:
            field: Coefficient field.
            ambient: Dimension of the ambient space.
            forms: Linear forms or coefficient sequences.

        Returns:
            The canonical subspace.

        """
        rows: list[Sequence[Scalar]] = [f.coeffs if isinstance(f, LinearForm) else f for f in forms]
        for row in rows:
            if len(row) != ambient:
                raise DimensionError(f"form of length {len(row)} in dimension {ambient}")
        reduced, pivots = rref(field, rows, ambient)
        return cls(field, ambient, reduced, pivots)

    @classmethod
    def whole(cls, field: CycloField, ambient: int) -> "Subspace":
        """Get the whole space."""
        return cls(field, ambient, (), ())

    @property
    def rank(self) -> int:
        """Codimension of the subspace."""
        return len(self.rows)

    @property
    def dimension(self) -> int:
        """Dimension of the subspace."""
        return self.ambient - self.rank

    @property
    def coordinates(self) -> tuple[int, ...]:
        """The non-pivot variables, which are coordinates on the subspace."""
        return tuple(i for i in range(self.ambient) if i not in self.pivots)

    def contains_form(self, form: LinearForm) -> bool:
        """Check whether a form vanishes on the subspace, i.e. lies in the row space."""
        rest: list[CycloNum] = list(form.coeffs)
        for row, p in zip(self.rows, self.pivots):
            c: CycloNum = rest[p]
            if c:
                rest = [a - c * b for a, b in zip(rest, row)]
        return not any(rest)

    def meet(self, form: LinearForm) -> "Subspace":
        """Intersect with a hyperplane."""
        return Subspace.from_forms(self.field, self.ambient, [*self.rows, form.coeffs])

    def is_contained_in(self, other: "Subspace") -> bool:
        """Check whether this subspace lies inside another."""
        return all(self.contains_form(LinearForm(self.field, row)) for row in other.rows)

    @property
    def sort_key(self) -> tuple:
        """Deterministic key for sorting subspaces by rank."""
        return (self.rank, tuple(tuple(c.coeffs for c in row) for row in self.rows))

    def __str__(self) -> str:
        if not self.rows:
            return "V"
        return " = ".join(str(LinearForm(self.field, row)) for row in self.rows) + " = 0"


@dataclass(frozen=True)
class Restriction:
    """The restriction of an arrangement to a flat, with its coordinate data."""

    arrangement: "Arrangement"
    """The restricted arrangement in the coordinates of the flat."""
    flat: Subspace
    """The flat restricted to."""
    coordinates: tuple[int, ...]
    """Original variables kept as coordinates, in order."""
    substitution: tuple[tuple[CycloNum, ...], ...]
    """For every original variable, its expression in the new coordinates."""
    preimages: tuple[tuple[int, ...], ...]
    """For every restricted hyperplane, the indices of the hyperplanes mapping onto it."""

    def substitution_polys(self) -> list[MultiPoly]:
        """Get the substitution as one linear polynomial per original variable."""
        return [MultiPoly.linear(self.arrangement.field, row) for row in self.substitution]


@dataclass(frozen=True)
class Essentialization:
    """An essential arrangement together with the dimension dropped."""

    arrangement: "Arrangement"
    """The essential arrangement."""
    drop: int
    """Dimension of the common intersection of the hyperplanes."""


@dataclass(frozen=True)
class Arrangement:
    """A central hyperplane arrangement over a cyclotomic field.

    Hyperplanes are canonical linear forms, pairwise non-proportional, in
    insertion order.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> A = arrangement_make(Q, 3, [[1, -1, 0], [1, 0, -1], [0, 1, -1]])
        >>> str(A.defining_polynomial())
        'x1^2*x2 - x1*x2^2 - x1^2*x3 + x2^2*x3 + x1*x3^2 - x2*x3^2'
        >>> R = A.restrict(A[0])
        >>> len(R.arrangement), R.arrangement.dim
        (1, 2)
        >>> E = A.essentialize()
        >>> E.arrangement.dim, E.drop
        (2, 1)

    """

    field: CycloField
    """Coefficient field."""
    dim: int
    """Dimension l of the ambient space."""
    hyperplanes: tuple[LinearForm, ...]
    """Canonical defining forms."""
    collapsed: int = dataclass_field(default=0, compare=False)
    """Number of proportional duplicates merged at construction."""

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __iter__(self) -> Iterator[LinearForm]:
        return iter(self.hyperplanes)

    def __getitem__(self, index: int) -> LinearForm:
        return self.hyperplanes[index]

    def __contains__(self, form: object) -> bool:
        return form in self._positions

    @cached_property
    def _positions(self) -> dict[LinearForm, int]:
        return {h: i for i, h in enumerate(self.hyperplanes)}

    def _form(self, form: "LinearForm | Sequence[Scalar]") -> LinearForm:
        if not isinstance(form, LinearForm):
            form = LinearForm.make(self.field, form)
        if form.field != self.field:
            raise FieldMismatchError(f"form over {form.field} for an arrangement over {self.field}")
        if form.dim != self.dim:
            raise DimensionError(f"form in {form.dim} variables for an arrangement in dimension {self.dim}")
        return form

    def index(self, form: "LinearForm | Sequence[Scalar]") -> int:
        """Get the position of a hyperplane.

        Raises:
            LatticeError: If the hyperplane is not in the arrangement.

        """
        form = self._form(form)
        try:
            return self._positions[form]
        except KeyError:
            raise LatticeError(f"hyperplane {form} is not in the arrangement") from None

    @property
    def key(self) -> tuple:
        """Canonical key of the arrangement as a set of hyperplanes."""
        return (self.field.conductor, self.dim, tuple(sorted(h.sort_key for h in self.hyperplanes)))

    def defining_polynomial(self) -> MultiPoly:
        """Get the product of the defining forms; 1 for the empty arrangement."""
        return product((h.to_poly() for h in self.hyperplanes), self.field, self.dim)

    def center(self) -> Subspace:
        """Get the common intersection of all hyperplanes."""
        return Subspace.from_forms(self.field, self.dim, self.hyperplanes)

    @property
    def essential_rank(self) -> int:
        """Rank of the span of the defining forms."""
        return self.center().rank

    def subspace_of(self, indices: Iterable[int]) -> Subspace:
        """Get the flat cut out by the hyperplanes at the given indices.

        Raises:
            LatticeError: If an index is out of range.

        """
        forms: list[LinearForm] = []
        for i in indices:
            if not 0 <= i < len(self):
                raise LatticeError(f"hyperplane index {i} out of range for {len(self)} hyperplanes")
            forms.append(self.hyperplanes[i])
        return Subspace.from_forms(self.field, self.dim, forms)

    def _flat(self, flat: "Subspace | LinearForm") -> Subspace:
        if isinstance(flat, LinearForm):
            flat = Subspace.from_forms(self.field, self.dim, [self._form(flat)])
        if flat.ambient != self.dim:
            raise DimensionError(f"subspace of a {flat.ambient}-dimensional space in dimension {self.dim}")
        if flat.field != self.field:
            raise FieldMismatchError(f"subspace over {flat.field} for an arrangement over {self.field}")
        cut: Subspace = Subspace.from_forms(
            self.field, self.dim, [h for h in self.hyperplanes if flat.contains_form(h)]
        )
        if cut != flat:
            raise LatticeError(f"{flat} is not in the intersection lattice")
        return flat

    def localize(self, flat: "Subspace | LinearForm") -> "Arrangement":
        """Get the subarrangement of hyperplanes containing a flat.

        Raises:
            LatticeError: If the subspace is not a flat of the arrangement.

        """
        flat = self._flat(flat)
        return Arrangement(self.field, self.dim, tuple(h for h in self.hyperplanes if flat.contains_form(h)))

    def restrict(self, flat: "Subspace | LinearForm") -> Restriction:
        """Restrict the arrangement to a flat.

        The pivot variables of the flat are eliminated; the remaining
        variables are the new coordinates. Traces that coincide up to a
        scalar are merged.

        Args:
            flat: A flat of the arrangement, or one of its hyperplanes.

        Returns:
            The restriction with its coordinate data.

        Raises:
            LatticeError: If the subspace is not a flat of the arrangement.

        """
        flat = self._flat(flat)
        coords: tuple[int, ...] = flat.coordinates
        zero, one = self.field.zero(), self.field.one()
        substitution: list[tuple[CycloNum, ...]] = [()] * self.dim
        for t, c in enumerate(coords):
            substitution[c] = tuple(one if s == t else zero for s in range(len(coords)))
        for row, p in zip(flat.rows, flat.pivots):
            substitution[p] = tuple(-row[c] for c in coords)

        forms: dict[LinearForm, list[int]] = {}
        for i, h in enumerate(self.hyperplanes):
            if flat.contains_form(h):
                continue
            traced: list[CycloNum] = []
            for t in range(len(coords)):
                total: CycloNum = zero
                for a, sub in zip(h.coeffs, substitution):
                    if a and sub[t]:
                        total = total + a * sub[t]
                traced.append(total)
            forms.setdefault(LinearForm.make(self.field, traced), []).append(i)
        restricted: Arrangement = Arrangement(self.field, len(coords), tuple(forms))
        logger.debug(f"Restricted {len(self)} hyperplanes to {flat}: {len(restricted)} hyperplanes")
        return Restriction(
            restricted, flat, coords, tuple(substitution), tuple(tuple(v) for v in forms.values())
        )

    def delete(self, form: "LinearForm | Sequence[Scalar]") -> "Arrangement":
        """Remove a hyperplane.

        Raises:
            LatticeError: If the hyperplane is not in the arrangement.

        """
        i: int = self.index(form)
        return Arrangement(self.field, self.dim, self.hyperplanes[:i] + self.hyperplanes[i + 1 :])

    def add(self, form: "LinearForm | Sequence[Scalar]") -> "Arrangement":
        """Append a hyperplane.

        Raises:
            LatticeError: If a proportional hyperplane is already present.

        """
        form = self._form(form)
        if form in self:
            raise LatticeError(f"hyperplane {form} is already in the arrangement")
        return Arrangement(self.field, self.dim, self.hyperplanes + (form,))

    def essentialize(self) -> Essentialization:
        """Pass to the quotient by the common intersection of the hyperplanes."""
        center: Subspace = self.center()
        forms: tuple[LinearForm, ...] = tuple(
            LinearForm.make(self.field, [h.coeffs[p] for p in center.pivots]) for h in self.hyperplanes
        )
        return Essentialization(Arrangement(self.field, center.rank, forms), self.dim - center.rank)

    def __str__(self) -> str:
        return "{" + ", ".join(str(h) for h in self.hyperplanes) + "}"


def arrangement_make(
    field: CycloField, dim: int, forms: Iterable["LinearForm | Sequence[Scalar]"]
) -> Arrangement:
    """Create an arrangement, canonicalizing forms and merging proportional ones.

    Args:
        field: Coefficient field.
        dim: Dimension of the ambient space.
        forms: Linear forms or coefficient sequences of length dim.

    Returns:
        The arrangement; `collapsed` counts the merged duplicates.

    Raises:
        ZeroFormError: If a form vanishes.
        DimensionError: If a form has the wrong length.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> A = arrangement_make(field_make(1), 2, [[1, 0], [2, 0], [0, 1]])
        >>> str(A), A.collapsed
        ('{x1, x2}', 1)

    """
    if dim < 0:
        raise DimensionError(f"negative dimension {dim}")
    seen: dict[LinearForm, None] = {}
    collapsed: int = 0
    for f in forms:
        coeffs: Sequence[Scalar] = f.coeffs if isinstance(f, LinearForm) else f
        if len(coeffs) != dim:
            raise DimensionError(f"form of length {len(coeffs)} in dimension {dim}")
        form: LinearForm = LinearForm.make(field, coeffs)
        if form in seen:
            collapsed += 1
        else:
            seen[form] = None
    if collapsed:
        logger.debug(f"Merged {collapsed} proportional hyperplanes")
    return Arrangement(field, dim, tuple(seen), collapsed)
