"""Intersection lattices, Möbius values and Poincaré polynomials."""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import networkx as nx

from free_arrangements.arrangement import Arrangement, Subspace


logger: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntPoly:
    """A univariate polynomial in t with integer coefficients.

    Examples:
        >>> p = IntPoly.from_exponents([0, 1, 2])
        >>> str(p), p.coeffs
        ('1 + 3t + 2t^2', (1, 3, 2))
        >>> p.linear_factors()
        [1, 2]
        >>> IntPoly((1, 1, 1)).linear_factors() is None
        True

    """

    coeffs: tuple[int, ...]
    """Coefficients, constant term first, without trailing zeros."""

    def __post_init__(self) -> None:
        trimmed: list[int] = list(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in trimmed))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "IntPoly":
        """Get the product of (1 + b t) over the given exponents b."""
        result: IntPoly = cls((1,))
        for b in exponents:
            result = result * cls((1, b))
        return result

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n: int = max(len(self.coeffs), len(other.coeffs))
        a: list[int] = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b: list[int] = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        result: list[int] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                result[i + j] += a * b
        return IntPoly(tuple(result))

    __rmul__ = __mul__

    def __call__(self, t: int | Fraction) -> int | Fraction:
        value: int | Fraction = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def linear_factors(self) -> list[int] | None:
        """Factor the polynomial as a product of terms 1 + b t with b > 0.

        Returns:
            The sorted factors b, or None if no such factorization exists.

        """
        if not self.coeffs or self.coeffs[0] != 1:
            return None
        remaining: list[int] = list(self.coeffs)
        factors: list[int] = []
        while len(remaining) > 1:
            lead: int = remaining[-1]
            if lead <= 0:
                return None
            for b in (d for d in range(1, lead + 1) if lead % d == 0):
                quotient: list[int] | None = _divide_linear(remaining, b)
                if quotient is not None:
                    factors.append(b)
                    remaining = quotient
                    break
            else:
                return None
        return sorted(factors)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono: str = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            magnitude: int = abs(c)
            body: str = str(magnitude) if not mono else (mono if magnitude == 1 else f"{magnitude}{mono}")
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)


def _divide_linear(coeffs: Sequence[int], b: int) -> list[int] | None:
    """Divide by 1 + b t exactly, or return None."""
    quotient: list[int] = []
    previous: int = 0
    for c in coeffs[:-1]:
        q: int = c - b * previous
        quotient.append(q)
        previous = q
    if coeffs[-1] != b * previous:
        return None
    return quotient


class IntersectionLattice:
    """The intersection lattice L(A), ranked by codimension.

    The Hasse diagram is a directed graph with an edge from every flat to
    each flat covering it.

    Examples:
        >>> from free_arrangements.arrangement import arrangement_make
        >>> from free_arrangements.field import field_make
        >>> A = arrangement_make(field_make(1), 3, [[1, -1, 0], [1, 0, -1], [0, 1, -1]])
        >>> L = intersection_lattice(A)
        >>> [len(L.rank_nodes(r)) for r in range(L.rank + 1)]
        [1, 3, 1]
        >>> L.mobius[L.rank_nodes(2)[0]]
        2

    """

    arrangement: Arrangement
    """The arrangement."""
    graph: nx.DiGraph
    """Hasse diagram from lower to higher rank."""
    mobius: dict[Subspace, int]
    """Möbius value mu(V, X) of every flat."""
    _ranks: list[list[Subspace]]
    """Flats by rank, each rank sorted deterministically."""

    def __init__(self, arrangement: Arrangement) -> None:
        """Build the lattice by breadth-first closure under intersection.

        Args:
            arrangement: The arrangement.

        """
        self.arrangement = arrangement
        bottom: Subspace = Subspace.whole(arrangement.field, arrangement.dim)
        self.graph = nx.DiGraph()
        self.graph.add_node(bottom)
        queue: deque[Subspace] = deque([bottom])
        while queue:
            node: Subspace = queue.popleft()
            for h in arrangement:
                if node.contains_form(h):
                    continue
                upper: Subspace = node.meet(h)
                if upper not in self.graph:
                    self.graph.add_node(upper)
                    queue.append(upper)
                self.graph.add_edge(node, upper)
        top_rank: int = max(x.rank for x in self.graph.nodes)
        self._ranks = [[] for _ in range(top_rank + 1)]
        for x in self.graph.nodes:
            self._ranks[x.rank].append(x)
        for nodes in self._ranks:
            nodes.sort(key=lambda x: x.sort_key)

        self.mobius = {bottom: 1}
        for nodes in self._ranks[1:]:
            for x in nodes:
                self.mobius[x] = -sum(self.mobius[y] for y in nx.ancestors(self.graph, x))
        logger.debug(f"Built intersection lattice with {len(self)} flats of rank up to {self.rank}")

    @property
    def rank(self) -> int:
        """The rank of the top flat."""
        return len(self._ranks) - 1

    @property
    def bottom(self) -> Subspace:
        """The whole space V."""
        return self._ranks[0][0]

    def rank_nodes(self, r: int) -> list[Subspace]:
        """Get the flats of rank r."""
        return list(self._ranks[r]) if 0 <= r < len(self._ranks) else []

    def atoms(self) -> list[Subspace]:
        """Get the hyperplanes as flats."""
        return self.rank_nodes(1)

    def __iter__(self) -> Iterator[Subspace]:
        for nodes in self._ranks:
            yield from nodes

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def __contains__(self, x: object) -> bool:
        return x in self.graph

    def below(self, x: Subspace) -> list[Subspace]:
        """Get the flats contained in x, including x itself."""
        return [x, *sorted(nx.descendants(self.graph, x), key=lambda y: y.sort_key)]

    def poincare(self) -> IntPoly:
        """Get the Poincaré polynomial sum mu(X) (-t)^r(X)."""
        coeffs: list[int] = [0] * (self.rank + 1)
        for x, mu in self.mobius.items():
            coeffs[x.rank] += mu * (-1) ** x.rank
        return IntPoly(tuple(coeffs))

    def characteristic(self) -> IntPoly:
        """Get the characteristic polynomial sum mu(X) t^dim(X)."""
        coeffs: list[int] = [0] * (self.arrangement.dim + 1)
        for x, mu in self.mobius.items():
            coeffs[x.dimension] += mu
        return IntPoly(tuple(coeffs))


def intersection_lattice(arrangement: Arrangement) -> IntersectionLattice:
    """Build the intersection lattice of an arrangement."""
    return IntersectionLattice(arrangement)


def poincare_poly(arrangement: Arrangement) -> IntPoly:
    """Get the Poincaré polynomial of an arrangement.

    Examples:
        >>> from free_arrangements.arrangement import arrangement_make
        >>> from free_arrangements.field import field_make
        >>> str(poincare_poly(arrangement_make(field_make(1), 2, [[1, 0], [0, 1]])))
        '1 + 2t + t^2'

    """
    return IntersectionLattice(arrangement).poincare()


def characteristic_poly(arrangement: Arrangement) -> IntPoly:
    """Get the characteristic polynomial t^l pi(A, -1/t) of an arrangement.

    Examples:
        >>> from free_arrangements.arrangement import arrangement_make
        >>> from free_arrangements.field import field_make
        >>> str(characteristic_poly(arrangement_make(field_make(1), 2, [[1, 0], [0, 1]])))
        '1 - 2t + t^2'

    """
    return IntersectionLattice(arrangement).characteristic()
