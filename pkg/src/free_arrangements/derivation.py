"""Modules of logarithmic derivations and freeness.

A derivation sum f_i D_i is stored as the vector (f_1, ..., f_l) of its
coefficients. The module D(A) is the intersection of the modules D(alpha_H)
over all hyperplanes, each of which has an explicit basis.
"""

import logging
from math import comb
from typing import Iterable, Iterator, Sequence

from free_arrangements.arrangement import Arrangement, LinearForm, Restriction
from free_arrangements.errors import (
    CertificateError,
    DimensionError,
    NotHomogeneousError,
    ZeroFormError,
)
from free_arrangements.field import CycloField, CycloNum, Scalar
from free_arrangements.linalg import SparseEchelon, SparseRow
from free_arrangements.module import (
    ModVec,
    Submodule,
    free_module,
    intersect_all,
    minimal_generators,
    module_membership,
)
from free_arrangements.polynomial import Monomial, MultiPoly, monomials_of_degree
from free_arrangements.report import FreenessReport


logger: logging.Logger = logging.getLogger(__name__)


class Derivation:
    """A polynomial derivation sum f_i D_i of S = K[x1, ..., xl].

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> theta = euler_derivation(Q, 2)
        >>> str(theta), theta.pdeg
        ('x1, x2', 1)
        >>> str(theta(MultiPoly.variable(Q, 2, 0) * MultiPoly.variable(Q, 2, 1)))
        '2*x1*x2'

    """

    __slots__ = ("vec",)

    vec: ModVec
    """Coefficients of D_1, ..., D_l."""

    def __init__(self, vec: ModVec) -> None:
        """Initialize the derivation.

        Args:
            vec: Coefficient vector; its rank must equal the number of variables.

        Raises:
            DimensionError: If rank and number of variables differ.

        """
        if vec.rank != vec.nvars:
            raise DimensionError(f"derivation with {vec.rank} coefficients in {vec.nvars} variables")
        self.vec = vec

    @classmethod
    def from_polys(cls, polys: Sequence[MultiPoly]) -> "Derivation":
        """Create a derivation from its coefficients."""
        return cls(ModVec(polys))

    @property
    def field(self) -> CycloField:
        """Coefficient field."""
        return self.vec.field

    @property
    def dim(self) -> int:
        """Number of variables."""
        return self.vec.nvars

    @property
    def pdeg(self) -> int | None:
        """Polynomial degree, if homogeneous."""
        return self.vec.pdeg

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.vec)

    def __getitem__(self, index: int) -> MultiPoly:
        return self.vec[index]

    def __bool__(self) -> bool:
        return bool(self.vec)

    def __call__(self, f: MultiPoly) -> MultiPoly:
        """Apply the derivation to a polynomial."""
        result: MultiPoly = MultiPoly.zero(self.field, self.dim)
        for i, c in enumerate(self.vec):
            if c:
                result = result + c * f.derivative(i)
        return result

    def apply_form(self, form: LinearForm) -> MultiPoly:
        """Apply the derivation to a linear form: sum alpha_i f_i."""
        result: MultiPoly = MultiPoly.zero(self.field, self.dim)
        for a, c in zip(form.coeffs, self.vec):
            if a and c:
                result = result + c * a
        return result

    def __mul__(self, factor: "MultiPoly | Scalar") -> "Derivation":
        return Derivation(self.vec * factor)

    __rmul__ = __mul__

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.vec + other.vec)

    def __sub__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.vec - other.vec)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.vec == other.vec

    def __hash__(self) -> int:
        return hash(self.vec)

    def __str__(self) -> str:
        """Format the coefficients, comma-separated."""
        return ", ".join(str(c) for c in self.vec)

    def __repr__(self) -> str:
        return f"Derivation({str(self)!r})"


def euler_derivation(field: CycloField, dim: int) -> Derivation:
    """Get the Euler derivation sum x_i D_i."""
    if dim < 1:
        raise DimensionError("the Euler derivation needs at least one variable")
    return Derivation.from_polys([MultiPoly.variable(field, dim, i) for i in range(dim)])


def vee(field: CycloField, vector: Sequence[Scalar]) -> Derivation:
    """Get the constant derivation sum v_i D_i of a vector.

    Raises:
        ZeroFormError: If the vector is zero.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> str(vee(field_make(1), [1, 1]))
        '1, 1'

    """
    values: list[CycloNum] = [field(v) for v in vector]
    if not any(values):
        raise ZeroFormError("vee of the zero vector")
    dim: int = len(values)
    return Derivation.from_polys([MultiPoly.constant(field, dim, v) for v in values])


def determinant(derivations: Sequence[Derivation]) -> MultiPoly:
    """Get the determinant of the coefficient matrix of l derivations.

    Column k of the matrix holds the coefficients of derivation k.

    Raises:
        DimensionError: If the number of derivations differs from the number of variables.

    """
    if not derivations:
        raise DimensionError("determinant of no derivations")
    dim: int = derivations[0].dim
    if len(derivations) != dim:
        raise DimensionError(f"{len(derivations)} derivations in {dim} variables")
    field: CycloField = derivations[0].field
    memo: dict[tuple[int, ...], MultiPoly] = {}

    def minor(columns: tuple[int, ...]) -> MultiPoly:
        # rows len(columns)..dim-1 are expanded against the given columns
        if not columns:
            return MultiPoly.constant(field, dim, 1)
        if columns in memo:
            return memo[columns]
        row: int = dim - len(columns)
        total: MultiPoly = MultiPoly.zero(field, dim)
        for position, column in enumerate(columns):
            entry: MultiPoly = derivations[column][row]
            if entry:
                rest: MultiPoly = minor(columns[:position] + columns[position + 1 :])
                term: MultiPoly = entry * rest
                total = total - term if position % 2 else total + term
        memo[columns] = total
        return total

    return minor(tuple(range(dim)))


def dalpha_basis(form: LinearForm) -> list[Derivation]:
    """Get an explicit basis of D(alpha) for a single linear form.

    The basis is the Euler derivation together with vee(e_j - alpha_j e_p)
    for every j other than the pivot p of alpha.

    Raises:
        CertificateError: If the determinant is not a nonzero multiple of alpha.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> alpha = LinearForm.make(field_make(1), [1, -1])
        >>> [str(theta) for theta in dalpha_basis(alpha)]
        ['x1, x2', '1, 1']
        >>> str(determinant(dalpha_basis(alpha)))
        'x1 - x2'

    """
    field: CycloField = form.field
    dim: int = form.dim
    p: int = form.pivot
    basis: list[Derivation] = [euler_derivation(field, dim)]
    for j in range(dim):
        if j == p:
            continue
        vector: list[CycloNum] = [field.zero()] * dim
        vector[j] = field.one()
        vector[p] = -form.coeffs[j]
        basis.append(vee(field, vector))
    det: MultiPoly = determinant(basis)
    alpha: MultiPoly = form.to_poly()
    if det.is_zero() or det != alpha * (det.leading_coefficient / alpha.leading_coefficient):
        logger.error(f"Determinant {det} of the basis of D({form}) is not a multiple of the form")
        raise CertificateError(f"bad basis for D({form})")
    return basis


def dalpha_module(form: LinearForm) -> Submodule:
    """Get D(alpha) as a submodule of the derivations."""
    return Submodule(form.field, form.dim, form.dim, [theta.vec for theta in dalpha_basis(form)])


def derivation_module(arrangement: Arrangement) -> Submodule:
    """Compute D(A) as the intersection of D(alpha_H) over all hyperplanes.

    The intersection is folded in hyperplane order, keeping a minimal
    generating set after each step.

    Examples:
        >>> from free_arrangements.arrangement import arrangement_make
        >>> from free_arrangements.field import field_make
        >>> D = derivation_module(arrangement_make(field_make(1), 2, [[1, 0], [0, 1]]))
        >>> sorted(D.degrees)
        [1, 1]

    """
    field, dim = arrangement.field, arrangement.dim
    if dim == 0:
        return Submodule(field, 0, 0)
    logger.debug(f"Computing D(A) for {len(arrangement)} hyperplanes in dimension {dim}")
    return intersect_all((dalpha_module(h) for h in arrangement), free_module(field, dim, dim))


def _eliminated(form: LinearForm) -> list[MultiPoly]:
    """Substitution images solving alpha = 0 for its pivot variable."""
    images: list[MultiPoly] = [MultiPoly.variable(form.field, form.dim, i) for i in range(form.dim)]
    images[form.pivot] = images[form.pivot] - form.to_poly()
    return images


def membership_test(theta: Derivation, arrangement: Arrangement) -> bool:
    """Check whether theta(alpha_H) is divisible by alpha_H for every hyperplane.

    Examples:
        >>> from free_arrangements.arrangement import arrangement_make
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> A = arrangement_make(Q, 2, [[1, 0], [0, 1]])
        >>> x1, zero = MultiPoly.variable(Q, 2, 0), MultiPoly.zero(Q, 2)
        >>> membership_test(Derivation.from_polys([zero, x1]), A)
        False
        >>> membership_test(Derivation.from_polys([x1, zero]), A)
        True

    """
    for h in arrangement:
        if h.dim != theta.dim:
            raise DimensionError(f"derivation in {theta.dim} variables, hyperplane in {h.dim}")
        if not theta.apply_form(h).substitute(_eliminated(h)).is_zero():
            return False
    return True


def saito_check(basis: Sequence[Derivation], arrangement: Arrangement) -> tuple[bool, CycloNum | None]:
    """Check Saito's criterion for l derivations.

    Args:
        basis: Candidate basis of D(A).
        arrangement: The arrangement.

    Returns:
        Whether all derivations lie in D(A) with det M = c Q(A) for a
        nonzero scalar c, and c if so.

    Raises:
        DimensionError: If the number of derivations is not l.
        NotHomogeneousError: If a derivation is not homogeneous.

    """
    field, dim = arrangement.field, arrangement.dim
    if len(basis) != dim:
        raise DimensionError(f"{len(basis)} derivations for an arrangement in dimension {dim}")
    if dim == 0:
        return True, field.one()
    for theta in basis:
        if theta and theta.pdeg is None:
            raise NotHomogeneousError(f"derivation ({theta}) is not homogeneous")
    if not all(membership_test(theta, arrangement) for theta in basis):
        logger.debug("Saito check failed: a derivation is not in D(A)")
        return False, None
    det: MultiPoly = determinant(basis)
    if det.is_zero():
        logger.debug("Saito check failed: zero determinant")
        return False, None
    q: MultiPoly = arrangement.defining_polynomial()
    c: CycloNum = det.leading_coefficient / q.leading_coefficient
    if det != q * c:
        logger.debug("Saito check failed: determinant is not a multiple of Q(A)")
        return False, None
    return True, c


def is_free(arrangement: Arrangement) -> FreenessReport:
    """Decide freeness of an arrangement.

    D(A) is free exactly when its minimal generating set has l elements;
    such a basis is then certified with Saito's criterion.

    Raises:
        CertificateError: If a computed basis fails its certificate.

    Examples:
        >>> from free_arrangements.arrangement import arrangement_make
        >>> from free_arrangements.field import field_make
        >>> A = arrangement_make(field_make(1), 2, [[1, 0], [0, 1], [1, -1], [1, 1]])
        >>> report = is_free(A)
        >>> report.free, report.exponents
        (True, (1, 3))

    """
    field, dim = arrangement.field, arrangement.dim
    if dim == 0:
        return FreenessReport(free=True, generator_count=0, exponents=(), basis=(), saito_constant=field.one())
    generators: list[ModVec] = minimal_generators(derivation_module(arrangement))
    count: int = len(generators)
    if count != dim:
        logger.info(f"Not free: {count} minimal generators in dimension {dim}")
        return FreenessReport(free=False, generator_count=count)
    basis: tuple[Derivation, ...] = tuple(Derivation(g) for g in generators)
    certified, constant = saito_check(basis, arrangement)
    if not certified:
        logger.error(f"Basis of D(A) for {arrangement} fails Saito's criterion")
        raise CertificateError("computed basis fails Saito's criterion")
    exponents: tuple[int, ...] = tuple(sorted(theta.pdeg for theta in basis))
    logger.info(f"Free with exponents {exponents}")
    return FreenessReport(
        free=True, generator_count=count, exponents=exponents, basis=basis, saito_constant=constant
    )


def degreewise_dim_oracle(arrangement: Arrangement, degree: int) -> int:
    """Compute dim D(A)_p by linear algebra alone.

    Unknowns are the coefficients of the monomial basis of the degree-p
    derivations; every hyperplane imposes that theta(alpha_H) vanishes on H.

    Args:
        arrangement: The arrangement.
        degree: Polynomial degree p >= 0.

    Returns:
        The dimension of the degree-p part of D(A).

    Examples:
        >>> from free_arrangements.catalog import braid
        >>> degreewise_dim_oracle(braid(3), 0), degreewise_dim_oracle(braid(3), 1)
        (1, 4)

    """
    if degree < 0:
        raise ValueError(f"negative degree {degree}")
    dim: int = arrangement.dim
    monomials: list[Monomial] = monomials_of_degree(dim, degree)
    index: dict[tuple[Monomial, int], int] = {
        (m, i): k for k, (m, i) in enumerate((m, i) for m in monomials for i in range(dim))
    }
    echelon: SparseEchelon = SparseEchelon()
    for h in arrangement:
        images: list[MultiPoly] = _eliminated(h)
        rows: dict[Monomial, SparseRow] = {}
        for m in monomials:
            image: MultiPoly = MultiPoly(h.field, dim, {m: 1}).substitute(images)
            for u, c in image.items():
                row: SparseRow = rows.setdefault(u, {})
                for i, a in enumerate(h.coeffs):
                    if a:
                        row[index[(m, i)]] = a * c
        for row in rows.values():
            echelon.add(row)
    result: int = len(index) - len(echelon)
    logger.debug(f"Oracle: dim D(A)_{degree} = {result}")
    return result


def hilbert_prediction(exponents: Iterable[int], dim: int, degree: int) -> int:
    """Predict dim D(A)_p for a free arrangement from its exponents.

    Examples:
        >>> hilbert_prediction([1, 1], 2, 2), hilbert_prediction([0, 1, 2], 3, 0)
        (4, 1)

    """
    return sum(comb(degree - b + dim - 1, dim - 1) for b in exponents if b <= degree)


def restriction_map(
    theta: Derivation,
    arrangement: Arrangement,
    hyperplane: LinearForm,
    restriction: Restriction | None = None,
) -> Derivation:
    """Restrict a derivation of D(A) to a hyperplane.

    The coefficients of the kept coordinates are restricted to H, in the
    coordinates of the restricted arrangement. The map preserves degrees.

    Args:
        theta: A derivation in D(A).
        arrangement: The arrangement.
        hyperplane: A hyperplane of the arrangement.
        restriction: The restriction to the hyperplane, if already computed.

    Returns:
        The image derivation of D(A^H).

    """
    if restriction is None:
        restriction = arrangement.restrict(hyperplane)
    images: list[MultiPoly] = restriction.substitution_polys()
    return Derivation.from_polys([theta[c].substitute(images) for c in restriction.coordinates])


def q_surjective(arrangement: Arrangement, hyperplane: LinearForm) -> bool:
    """Check whether the restriction map D(A) -> D(A^H) is onto.

    Returns:
        True iff every generator of D(A^H) lies in the span of the images of
        the generators of D(A).

    """
    restriction: Restriction = arrangement.restrict(hyperplane)
    target: Arrangement = restriction.arrangement
    if target.dim == 0:
        return True
    images: list[ModVec] = [
        restriction_map(Derivation(g), arrangement, hyperplane, restriction).vec
        for g in derivation_module(arrangement).generators
    ]
    span: Submodule = Submodule(target.field, target.dim, target.dim, images)
    return all(module_membership(g, span) for g in derivation_module(target).generators)
