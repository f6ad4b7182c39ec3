"""Exact arithmetic over the rationals and cyclotomic fields."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from free_arrangements.errors import FieldMismatchError


logger: logging.Logger = logging.getLogger(__name__)


type Rational = Fraction
"""Rationals are plain `fractions.Fraction` values (always in lowest terms)."""

type Scalar = CycloNum | Fraction | int
"""Anything that can be coerced into a cyclotomic field."""


def _divide_exact(numerator: list[int], denominator: Sequence[int]) -> list[int]:
    """Divide integer polynomials exactly; the denominator must be monic.

    Args:
        numerator: Coefficients of the dividend, constant term first.
        denominator: Coefficients of the monic divisor, constant term first.

    Returns:
        Coefficients of the quotient.

    Raises:
        ArithmeticError: If the division leaves a remainder.

    """
    remainder: list[int] = list(numerator)
    size: int = len(denominator) - 1
    quotient: list[int] = [0] * (len(remainder) - size)
    for i in range(len(quotient) - 1, -1, -1):
        c: int = remainder[i + size]
        quotient[i] = c
        if c:
            for j, d in enumerate(denominator):
                remainder[i + j] -= c * d
    if any(remainder[:size]):
        raise ArithmeticError("inexact polynomial division")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Compute the n-th cyclotomic polynomial by dividing x^n - 1 by the smaller ones.

    Args:
        n: Positive integer.

    Returns:
        Integer coefficients, constant term first.

    Raises:
        ValueError: If n is not positive.

    Examples:
        >>> cyclotomic_polynomial(1)
        (-1, 1)
        >>> cyclotomic_polynomial(3)
        (1, 1, 1)
        >>> cyclotomic_polynomial(4)
        (1, 0, 1)
        >>> cyclotomic_polynomial(12)
        (1, 0, -1, 0, 1)

    """
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    poly: list[int] = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _divide_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@dataclass(frozen=True)
class CycloField:
    """The cyclotomic field Q(z) where z is a primitive n-th root of unity.

    Elements are stored in the power basis 1, z, ..., z^(d-1), d = phi(n).

    Examples:
        >>> K = field_make(4)
        >>> str(K), K.degree
        ('Q(z4)', 2)
        >>> z = K.generator()
        >>> str(z * z)
        '-1'

    """

    conductor: int
    """The conductor n."""
    modulus: tuple[int, ...]
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""

    def __str__(self) -> str:
        """Get the name of the field."""
        if self.conductor == 1:
            return "Q"
        return f"Q(z{self.conductor})"

    def __reduce__(self) -> tuple:
        return (field_make, (self.conductor,))

    @property
    def degree(self) -> int:
        """Degree phi(n) of the field over Q."""
        return len(self.modulus) - 1

    @property
    def is_rational(self) -> bool:
        """Whether the field is Q itself."""
        return self.degree == 1

    @cached_property
    def _reductions(self) -> tuple[tuple[int, ...], ...]:
        """Power-basis coordinates of z^k for 0 <= k <= 2d - 2."""
        d: int = self.degree
        current: list[int] = [1] + [0] * (d - 1)
        table: list[tuple[int, ...]] = [tuple(current)]
        for _ in range(1, max(2 * d - 1, 1)):
            top: int = current[-1]
            current = [0] + current[:-1]
            if top:
                for i in range(d):
                    current[i] -= top * self.modulus[i]
            table.append(tuple(current))
        return tuple(table)

    @cached_property
    def _roots(self) -> tuple["CycloNum", ...]:
        """The powers z^0, ..., z^(n-1)."""
        z: CycloNum = self._generator()
        roots: list[CycloNum] = [self.one()]
        for _ in range(1, self.conductor):
            roots.append(roots[-1] * z)
        return tuple(roots)

    def _generator(self) -> "CycloNum":
        if self.degree == 1:
            return CycloNum(self, (Fraction(-self.modulus[0]),))
        coeffs: list[Fraction] = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return CycloNum(self, tuple(coeffs))

    def reduce(self, coeffs: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        """Reduce a coefficient vector of any length modulo the cyclotomic polynomial.

        Args:
            coeffs: Coefficients of a polynomial in z, constant term first.

        Returns:
            Canonical power-basis coordinates of length phi(n).

        """
        d: int = self.degree
        work: list[Fraction] = [Fraction(c) for c in coeffs]
        for k in range(len(work) - 1, d - 1, -1):
            c: Fraction = work[k]
            if c:
                work[k] = Fraction(0)
                for i in range(d):
                    work[k - d + i] -= c * self.modulus[i]
        work.extend([Fraction(0)] * (d - len(work)))
        return tuple(work[:d])

    def zero(self) -> "CycloNum":
        """Get the additive identity."""
        return CycloNum(self, (Fraction(0),) * self.degree)

    def one(self) -> "CycloNum":
        """Get the multiplicative identity."""
        return CycloNum(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

    def generator(self) -> "CycloNum":
        """Get the primitive root of unity z."""
        return self.root(1)

    def root(self, k: int) -> "CycloNum":
        """Get the power z^k of the primitive root of unity.

        Args:
            k: Any integer exponent; negative exponents are allowed.

        Returns:
            The root of unity z^k.

        """
        return self._roots[k % self.conductor]

    def __call__(self, value: "Scalar") -> "CycloNum":
        """Coerce a scalar into the field.

        Args:
            value: A field element, a fraction or an integer.

        Returns:
            The corresponding field element.

        Raises:
            FieldMismatchError: If the value lives in another field.
            TypeError: If the value is not a scalar.

        """
        if isinstance(value, CycloNum):
            if value.field is not self and value.field != self:
                raise FieldMismatchError(f"cannot use an element of {value.field} in {self}")
            return value
        if isinstance(value, (int, Fraction)):
            return CycloNum(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")


@lru_cache(maxsize=None)
def field_make(n: int) -> CycloField:
    """Create the cyclotomic field of conductor n.

    Fields are cached, so equal conductors give the identical object.

    Args:
        n: Positive conductor; n = 1 gives the rationals.

    Returns:
        The cyclotomic field Q(z_n).

    Examples:
        >>> field_make(1).is_rational
        True
        >>> field_make(3).modulus
        (1, 1, 1)

    """
    field: CycloField = CycloField(n, cyclotomic_polynomial(n))
    logger.debug(f"Created field {field} of degree {field.degree}")
    return field


def _poly_divmod(
    a: list[Fraction], b: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    """Divide univariate rational polynomials (constant term first, no trailing zeros)."""
    remainder: list[Fraction] = list(a)
    if len(remainder) < len(b):
        return [], remainder
    quotient: list[Fraction] = [Fraction(0)] * (len(remainder) - len(b) + 1)
    lead: Fraction = b[-1]
    for i in range(len(quotient) - 1, -1, -1):
        c: Fraction = remainder[i + len(b) - 1] / lead
        quotient[i] = c
        if c:
            for j, v in enumerate(b):
                remainder[i + j] -= c * v
    remainder = remainder[: len(b) - 1]
    while remainder and not remainder[-1]:
        remainder.pop()
    return quotient, remainder


def _poly_sub_mul(a: list[Fraction], q: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Compute a - q * b for univariate rational polynomials."""
    result: list[Fraction] = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                result[i + j] -= x * y
    while result and not result[-1]:
        result.pop()
    return result


class CycloNum:
    """An exact element of a cyclotomic field.

    Values are immutable; all arithmetic returns new canonical elements.

    Examples:
        >>> K = field_make(3)
        >>> z = K.generator()
        >>> str(1 + z + z * z)
        '0'
        >>> str((1 + z).inverse())
        '-z'
        >>> Q = field_make(1)
        >>> str(Q(Fraction(1, 2)) + Q(Fraction(1, 3)))
        '5/6'

    """

    __slots__ = ("field", "coeffs")

    field: CycloField
    """Field the element belongs to."""
    coeffs: tuple[Fraction, ...]
    """Power-basis coordinates of length phi(n)."""

    def __init__(self, field: CycloField, coeffs: Sequence[Fraction | int]) -> None:
        """Initialize the element.

        Args:
            field: Field the element belongs to.
            coeffs: Coordinates in the power basis; longer vectors are reduced.

        """
        self.field = field
        if len(coeffs) == field.degree and all(type(c) is Fraction for c in coeffs):
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = field.reduce(coeffs)

    def _coerce(self, other: object) -> "CycloNum | None":
        if isinstance(other, CycloNum):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __add__(self, other: object) -> "CycloNum":
        o: CycloNum | None = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other: object) -> "CycloNum":
        o: CycloNum | None = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other: object) -> "CycloNum":
        o: CycloNum | None = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "CycloNum":
        o: CycloNum | None = self._coerce(other)
        if o is None:
            return NotImplemented
        d: int = self.field.degree
        if d == 1:
            return CycloNum(self.field, (self.coeffs[0] * o.coeffs[0],))
        table: tuple[tuple[int, ...], ...] = self.field._reductions
        result: list[Fraction] = [Fraction(0)] * d
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if not b:
                    continue
                ab: Fraction = a * b
                k: int = i + j
                if k < d:
                    result[k] += ab
                else:
                    for t, p in enumerate(table[k]):
                        if p:
                            result[t] += ab * p
        return CycloNum(self.field, tuple(result))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Compute the multiplicative inverse with the extended Euclidean algorithm.

        Returns:
            The inverse element.

        Raises:
            ZeroDivisionError: If the element is zero.

        """
        if not self:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        if self.field.degree == 1:
            return CycloNum(self.field, (1 / self.coeffs[0],))
        a: list[Fraction] = [Fraction(c) for c in self.field.modulus]
        b: list[Fraction] = list(self.coeffs)
        while b and not b[-1]:
            b.pop()
        s0: list[Fraction] = []
        s1: list[Fraction] = [Fraction(1)]
        while len(b) > 1:
            q, r = _poly_divmod(a, b)
            a, b = b, r
            s0, s1 = s1, _poly_sub_mul(s0, q, s1)
        # b is now a nonzero constant and s1 * self = b mod the modulus
        c: Fraction = b[0]
        return CycloNum(self.field, [v / c for v in s1])

    def __truediv__(self, other: object) -> "CycloNum":
        o: CycloNum | None = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "CycloNum":
        o: CycloNum | None = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "CycloNum":
        if k < 0:
            return self.inverse() ** (-k)
        result: CycloNum = self.field.one()
        base: CycloNum = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloNum):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self) -> int:
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def is_rational(self) -> bool:
        """Whether the element lies in Q."""
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        """Convert a rational element to a fraction.

        Raises:
            ValueError: If the element is not rational.

        """
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __str__(self) -> str:
        """Format the element in the scalar syntax, e.g. `1-2z+z^2`."""
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            a: Fraction = abs(c)
            if k == 0:
                body: str = str(a)
            else:
                mono: str = "z" if k == 1 else f"z^{k}"
                if a == 1:
                    body = mono
                elif a.denominator == 1:
                    body = f"{a}{mono}"
                else:
                    body = f"({a}){mono}"
            if c < 0:
                parts.append(f"-{body}")
            elif parts:
                parts.append(f"+{body}")
            else:
                parts.append(body)
        return "".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"CycloNum({str(self)!r}, n={self.field.conductor})"

    def __reduce__(self) -> tuple:
        return (CycloNum, (self.field, self.coeffs))
