"""Multivariate polynomials over cyclotomic fields."""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Self, Sequence

from free_arrangements.errors import DimensionError, FieldMismatchError
from free_arrangements.field import CycloField, CycloNum, Scalar


logger: logging.Logger = logging.getLogger(__name__)


type Monomial = tuple[int, ...]
"""Exponent vector of a monomial in the variables x1, ..., xl."""


@lru_cache(maxsize=1 << 18)
def mono_key(m: Monomial) -> tuple[int, Monomial]:
    """Get the sort key of a monomial in graded reverse lexicographic order.

    Smaller keys belong to greater monomials, so sorting ascending lists terms
    from the leading one down.

    Args:
        m: Exponent vector.

    Returns:
        The sort key.

    """
    return (-sum(m), m[::-1])


def mono_compare(a: Monomial, b: Monomial) -> int:
    """Compare two monomials in graded reverse lexicographic order.

    Args:
        a: First exponent vector.
        b: Second exponent vector.

    Returns:
        1 if a > b, -1 if a < b and 0 if they are equal.

    Raises:
        DimensionError: If the exponent vectors have different lengths.

    Examples:
        >>> mono_compare((2, 0), (1, 1))
        1
        >>> mono_compare((1, 0), (0, 2))
        -1
        >>> mono_compare((1, 1), (1, 1))
        0

    """
    if len(a) != len(b):
        raise DimensionError(f"monomials in {len(a)} and {len(b)} variables")
    ka, kb = mono_key(a), mono_key(b)
    if ka == kb:
        return 0
    return 1 if ka < kb else -1


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Multiply two monomials."""
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Divide monomial a by monomial b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """Check whether monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    """Get the least common multiple of two monomials."""
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """List all monomials of the given total degree, greatest first.

    Args:
        nvars: Number of variables.
        degree: Total degree.

    Returns:
        Exponent vectors sorted in descending graded reverse lexicographic order.

    Examples:
        >>> monomials_of_degree(2, 2)
        [(2, 0), (1, 1), (0, 2)]
        >>> len(monomials_of_degree(3, 2))
        6

    """
    if degree < 0:
        return []
    if nvars == 0:
        return [()] if degree == 0 else []
    result: list[Monomial] = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exps: list[int] = [0] * nvars
        for i in combo:
            exps[i] += 1
        result.append(tuple(exps))
    result.sort(key=mono_key)
    return result


class MultiPoly:
    """A polynomial in x1, ..., xl with coefficients in a cyclotomic field.

    Values are immutable. Terms are kept in a dictionary and listed in
    descending graded reverse lexicographic order on demand.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> x1, x2 = MultiPoly.variable(Q, 2, 0), MultiPoly.variable(Q, 2, 1)
        >>> str((x1 - x2) * (x1 + x2))
        'x1^2 - x2^2'
        >>> ((x1 - x2) * x2).homogeneous_degree
        2
        >>> (x1 + 1).homogeneous_degree is None
        True

    """

    __slots__ = ("field", "nvars", "_terms")

    field: CycloField
    """Coefficient field."""
    nvars: int
    """Number of variables."""
    _terms: dict[Monomial, CycloNum]
    """Nonzero coefficients by monomial."""

    def __init__(
        self,
        field: CycloField,
        nvars: int,
        terms: Mapping[Monomial, Scalar] | None = None,
    ) -> None:
        """Initialize the polynomial.

        Args:
            field: Coefficient field.
            nvars: Number of variables.
            terms: Coefficients by monomial; zero coefficients are dropped.

        Raises:
            DimensionError: If a monomial has the wrong number of variables.

        """
        self.field = field
        self.nvars = nvars
        self._terms = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise DimensionError(f"monomial {m} in a ring with {nvars} variables")
            value: CycloNum = field(c)
            if value:
                self._terms[tuple(m)] = value

    @classmethod
    def _make(cls, field: CycloField, nvars: int, terms: dict[Monomial, CycloNum]) -> Self:
        """Wrap an already clean term dictionary without copying or checking."""
        poly: Self = cls.__new__(cls)
        poly.field = field
        poly.nvars = nvars
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, field: CycloField, nvars: int) -> Self:
        """Get the zero polynomial."""
        return cls._make(field, nvars, {})

    @classmethod
    def constant(cls, field: CycloField, nvars: int, value: Scalar) -> Self:
        """Get a constant polynomial."""
        return cls(field, nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, field: CycloField, nvars: int, index: int) -> Self:
        """Get the variable x_(index+1).

        Args:
            field: Coefficient field.
            nvars: Number of variables.
            index: 0-based variable index.

        Returns:
            The variable as a polynomial.

        """
        if not 0 <= index < nvars:
            raise DimensionError(f"variable index {index} out of range for {nvars} variables")
        exps: list[int] = [0] * nvars
        exps[index] = 1
        return cls._make(field, nvars, {tuple(exps): field.one()})

    @classmethod
    def linear(cls, field: CycloField, coeffs: Sequence[Scalar]) -> Self:
        """Get the linear form sum c_i x_i.

        Args:
            field: Coefficient field.
            coeffs: One coefficient per variable.

        Returns:
            The linear polynomial.

        """
        nvars: int = len(coeffs)
        terms: dict[Monomial, Scalar] = {}
        for i, c in enumerate(coeffs):
            exps: list[int] = [0] * nvars
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(field, nvars, terms)

    def _check(self, other: "MultiPoly") -> None:
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatchError(f"cannot combine polynomials over {self.field} and {other.field}")
        if other.nvars != self.nvars:
            raise DimensionError(f"cannot combine polynomials in {self.nvars} and {other.nvars} variables")

    def _lift(self, other: object) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (CycloNum, int, Fraction)):
            return MultiPoly.constant(self.field, self.nvars, other)
        return None

    def items(self) -> Iterator[tuple[Monomial, CycloNum]]:
        """Iterate over (monomial, coefficient) pairs in no particular order."""
        return iter(self._terms.items())

    @property
    def terms(self) -> list[tuple[CycloNum, Monomial]]:
        """The (coefficient, monomial) pairs sorted strictly descending."""
        return [(self._terms[m], m) for m in sorted(self._terms, key=mono_key)]

    def monomials(self) -> list[Monomial]:
        """Get the monomials sorted strictly descending."""
        return sorted(self._terms, key=mono_key)

    def coefficient(self, m: Monomial) -> CycloNum:
        """Get the coefficient of a monomial (zero if absent)."""
        return self._terms.get(tuple(m), self.field.zero())

    def __len__(self) -> int:
        """Get the number of terms."""
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self._terms

    @property
    def leading_monomial(self) -> Monomial:
        """The greatest monomial.

        Raises:
            ValueError: If the polynomial is zero.

        """
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return min(self._terms, key=mono_key)

    @property
    def leading_coefficient(self) -> CycloNum:
        """The coefficient of the greatest monomial."""
        return self._terms[self.leading_monomial]

    @property
    def degree(self) -> int:
        """The total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    @property
    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None if not homogeneous or zero."""
        degrees: set[int] = {sum(m) for m in self._terms}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def __add__(self, other: object) -> "MultiPoly":
        o: MultiPoly | None = self._lift(other)
        if o is None:
            return NotImplemented
        terms: dict[Monomial, CycloNum] = dict(self._terms)
        for m, c in o._terms.items():
            v: CycloNum | None = terms.get(m)
            s: CycloNum = c if v is None else v + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MultiPoly._make(self.field, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._make(self.field, self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "MultiPoly":
        o: MultiPoly | None = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "MultiPoly":
        o: MultiPoly | None = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c: Scalar) -> "MultiPoly":
        """Multiply by a scalar."""
        value: CycloNum = self.field(c)
        if not value:
            return MultiPoly.zero(self.field, self.nvars)
        return MultiPoly._make(self.field, self.nvars, {m: v * value for m, v in self._terms.items()})

    def __mul__(self, other: object) -> "MultiPoly":
        if isinstance(other, (CycloNum, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        terms: dict[Monomial, CycloNum] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m: Monomial = mono_mul(m1, m2)
                v: CycloNum | None = terms.get(m)
                p: CycloNum = c1 * c2
                terms[m] = p if v is None else v + p
        return MultiPoly._make(self.field, self.nvars, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers of polynomials are not defined")
        result: MultiPoly = MultiPoly.constant(self.field, self.nvars, 1)
        base: MultiPoly = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.field == other.field and self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (CycloNum, int, Fraction)):
            return self == MultiPoly.constant(self.field, self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def derivative(self, index: int) -> "MultiPoly":
        """Differentiate with respect to x_(index+1).

        Args:
            index: 0-based variable index.

        Returns:
            The partial derivative.

        """
        terms: dict[Monomial, CycloNum] = {}
        for m, c in self._terms.items():
            e: int = m[index]
            if e:
                reduced: list[int] = list(m)
                reduced[index] = e - 1
                terms[tuple(reduced)] = c * e
        return MultiPoly._make(self.field, self.nvars, terms)

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute a polynomial for every variable.

        Args:
            images: One polynomial per variable, all in a common target ring.

        Returns:
            The composed polynomial in the target ring.

        Raises:
            DimensionError: If the number of images is wrong.

        """
        if len(images) != self.nvars:
            raise DimensionError(f"{len(images)} images for {self.nvars} variables")
        if not images:
            return MultiPoly._make(self.field, 0, dict(self._terms))
        target: MultiPoly = images[0]
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            key: tuple[int, int] = (i, e)
            if key not in powers:
                powers[key] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return powers[key]

        result: dict[Monomial, CycloNum] = {}
        for m, c in self._terms.items():
            term: MultiPoly = MultiPoly.constant(self.field, target.nvars, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            for k, v in term._terms.items():
                s: CycloNum = result[k] + v if k in result else v
                if s:
                    result[k] = s
                else:
                    result.pop(k, None)
        return MultiPoly._make(self.field, target.nvars, result)

    def __str__(self) -> str:
        """Format the polynomial, e.g. `x1^2*x2 - (1+z)*x3`."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for c, m in self.terms:
            factors: list[str] = [
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(m) if e
            ]
            mono: str = "*".join(factors)
            negative: bool = False
            if c.is_rational():
                value: Fraction = c.to_fraction()
                negative = value < 0
                magnitude: Fraction = abs(value)
                if not mono:
                    body: str = str(magnitude)
                elif magnitude == 1:
                    body = mono
                else:
                    body = f"{magnitude}*{mono}"
            else:
                body = f"({c})*{mono}" if mono else f"({c})"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"


def product(polys: Iterable[MultiPoly], field: CycloField, nvars: int) -> MultiPoly:
    """Multiply polynomials together; the empty product is 1.

    Args:
        polys: Factors.
        field: Coefficient field.
        nvars: Number of variables.

    Returns:
        The product.

    """
    result: MultiPoly = MultiPoly.constant(field, nvars, 1)
    for p in polys:
        result = result * p
    return result
