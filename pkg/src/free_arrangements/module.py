"""Graded submodules of free modules over polynomial rings.

Gröbner bases use grevlex on the ring and term-over-position on the module, or
an elimination order when syzygies are computed.
"""

import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from free_arrangements.errors import DimensionError, FieldMismatchError, NotHomogeneousError, ZeroFormError
from free_arrangements.field import CycloField, CycloNum, Scalar
from free_arrangements.polynomial import (
    Monomial,
    MultiPoly,
    mono_div,
    mono_divides,
    mono_key,
    mono_lcm,
    mono_mul,
)


logger: logging.Logger = logging.getLogger(__name__)


type Term = tuple[Monomial, int]
"""A module monomial: a ring monomial at a free-module position."""

type TermDict = dict[Term, CycloNum]
"""Sparse module vector: nonzero coefficients by module monomial."""


class ModVec:
    """A vector in the free module S^r over S = K[x1, ..., xl].

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> x1, x2 = MultiPoly.variable(Q, 2, 0), MultiPoly.variable(Q, 2, 1)
        >>> v = ModVec([x1, x2])
        >>> str(v), v.pdeg
        ('(x1, x2)', 1)
        >>> str(v * x1), (v * x1).pdeg
        ('(x1^2, x1*x2)', 2)

    """

    __slots__ = ("components",)

    components: tuple[MultiPoly, ...]
    """One polynomial per free generator."""

    def __init__(self, components: Sequence[MultiPoly]) -> None:
        """Initialize the vector.

        Args:
            components: Polynomials over a common ring; at least one.

        Raises:
            DimensionError: If there are no components or the rings differ.

        """
        if not components:
            raise DimensionError("a module vector needs at least one component")
        first: MultiPoly = components[0]
        for c in components[1:]:
            if c.nvars != first.nvars:
                raise DimensionError(f"components in {first.nvars} and {c.nvars} variables")
            if c.field != first.field:
                raise FieldMismatchError(f"components over {first.field} and {c.field}")
        self.components = tuple(components)

    @classmethod
    def zero(cls, field: CycloField, nvars: int, rank: int) -> "ModVec":
        """Get the zero vector of S^rank."""
        return cls([MultiPoly.zero(field, nvars)] * rank)

    @classmethod
    def unit(cls, field: CycloField, nvars: int, rank: int, index: int) -> "ModVec":
        """Get the free generator e_(index+1) of S^rank."""
        components: list[MultiPoly] = [MultiPoly.zero(field, nvars)] * rank
        components[index] = MultiPoly.constant(field, nvars, 1)
        return cls(components)

    @classmethod
    def from_terms(cls, field: CycloField, nvars: int, rank: int, terms: TermDict) -> "ModVec":
        """Build a vector from a sparse term dictionary."""
        split: list[dict[Monomial, CycloNum]] = [{} for _ in range(rank)]
        for (m, pos), c in terms.items():
            split[pos][m] = c
        return cls([MultiPoly._make(field, nvars, t) for t in split])

    def to_terms(self, offset: int = 0) -> TermDict:
        """Get the sparse term dictionary, shifting positions by an offset."""
        return {(m, i + offset): c for i, p in enumerate(self.components) for m, c in p.items()}

    @property
    def field(self) -> CycloField:
        """Coefficient field."""
        return self.components[0].field

    @property
    def nvars(self) -> int:
        """Number of ring variables."""
        return self.components[0].nvars

    @property
    def rank(self) -> int:
        """Rank of the ambient free module."""
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.components)

    def __getitem__(self, index: int) -> MultiPoly:
        return self.components[index]

    def __bool__(self) -> bool:
        return any(self.components)

    def is_zero(self) -> bool:
        """Whether all components vanish."""
        return not self

    @property
    def pdeg(self) -> int | None:
        """The common degree of the nonzero components if they are homogeneous of equal degree."""
        degree: int | None = None
        for c in self.components:
            if not c:
                continue
            d: int | None = c.homogeneous_degree
            if d is None or (degree is not None and d != degree):
                return None
            degree = d
        return degree

    @property
    def degree(self) -> int:
        """The maximal total degree of a component; -1 for the zero vector."""
        return max(c.degree for c in self.components)

    def _check(self, other: "ModVec") -> None:
        if other.rank != self.rank:
            raise DimensionError(f"vectors of rank {self.rank} and {other.rank}")

    def __add__(self, other: "ModVec") -> "ModVec":
        self._check(other)
        return ModVec([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other: "ModVec") -> "ModVec":
        self._check(other)
        return ModVec([a - b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> "ModVec":
        return ModVec([-a for a in self.components])

    def __mul__(self, factor: "MultiPoly | Scalar") -> "ModVec":
        if isinstance(factor, (MultiPoly, CycloNum, int, Fraction)):
            return ModVec([a * factor for a in self.components])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModVec):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def __repr__(self) -> str:
        return f"ModVec({str(self)!r})"


@dataclass(frozen=True)
class ModuleOrder:
    """A monomial order on a free module.

    Without a split this is term over position: grevlex on the monomial,
    ties broken by the smaller position. With a split, every position below
    the split is greater than every position at or above it (elimination of
    the leading block), term over position inside each block.
    """

    split: int | None = None
    """First position of the eliminated-last block, if any."""

    def key(self, term: Term) -> tuple:
        """Get the sort key of a module monomial; smaller keys are greater terms."""
        mono, pos = term
        if self.split is None:
            return (mono_key(mono), pos)
        return (pos >= self.split, mono_key(mono), pos)

    def leading(self, terms: Iterable[Term]) -> Term:
        """Get the greatest of the given terms."""
        return min(terms, key=self.key)


TERM_OVER_POSITION: ModuleOrder = ModuleOrder()


def modvec_compare_leading(a: ModVec, b: ModVec, order: ModuleOrder = TERM_OVER_POSITION) -> int:
    """Compare the leading terms of two vectors.

    Args:
        a: First vector.
        b: Second vector.
        order: Module order.

    Returns:
        1 if the leading term of a is greater, -1 if smaller, 0 if equal.

    Raises:
        ZeroFormError: If either vector is zero.
        DimensionError: If the ranks differ.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> x = MultiPoly.variable(Q, 2, 0)
        >>> zero = MultiPoly.zero(Q, 2)
        >>> modvec_compare_leading(ModVec([x, zero]), ModVec([zero, x]))
        1
        >>> modvec_compare_leading(ModVec([zero, x]), ModVec([x * x, zero]))
        -1

    """
    if not a or not b:
        raise ZeroFormError("the zero vector has no leading term")
    a._check(b)
    ka = order.key(order.leading(a.to_terms()))
    kb = order.key(order.leading(b.to_terms()))
    if ka == kb:
        return 0
    return 1 if ka < kb else -1


def _monic(terms: TermDict, lead: Term) -> TermDict:
    inv: CycloNum = terms[lead].inverse()
    if inv == 1:
        return terms
    return {t: c * inv for t, c in terms.items()}


def _shift(terms: TermDict, mono: Monomial, coeff: CycloNum | None = None) -> TermDict:
    if coeff is None:
        return {(mono_mul(m, mono), p): c for (m, p), c in terms.items()}
    return {(mono_mul(m, mono), p): c * coeff for (m, p), c in terms.items()}


class _Reducer:
    """Division of module vectors by a set of monic reducers."""

    field: CycloField
    """Coefficient field."""
    nvars: int
    """Number of ring variables."""
    rank: int
    """Rank of the free module."""
    order: ModuleOrder
    """Module order."""
    _reducers: dict[int, dict[int, tuple[Monomial, TermDict]]]
    """Position to reducers with their leading monomials, keyed by an id."""

    def __init__(self, field: CycloField, nvars: int, rank: int, order: ModuleOrder) -> None:
        self.field = field
        self.nvars = nvars
        self.rank = rank
        self.order = order
        self._reducers = {}

    def _register(self, ident: int, lead: Term, terms: TermDict) -> None:
        self._reducers.setdefault(lead[1], {})[ident] = (lead[0], terms)

    def _unregister(self, ident: int, pos: int) -> None:
        self._reducers.get(pos, {}).pop(ident, None)

    def _find(self, term: Term) -> tuple[Monomial, TermDict] | None:
        mono, pos = term
        for lead, terms in self._reducers.get(pos, {}).values():
            if mono_divides(lead, mono):
                return lead, terms
        return None

    def _reduce(self, terms: TermDict) -> TermDict:
        """Fully reduce a term dictionary; the input is not modified."""
        key = self.order.key
        work: TermDict = dict(terms)
        heap: list[tuple[tuple, Term]] = [(key(t), t) for t in work]
        heapq.heapify(heap)
        result: TermDict = {}
        while heap:
            _, t = heapq.heappop(heap)
            c: CycloNum | None = work.pop(t, None)
            if c is None:
                continue
            hit: tuple[Monomial, TermDict] | None = self._find(t)
            if hit is None:
                result[t] = c
                continue
            lead, reducer = hit
            q: Monomial = mono_div(t[0], lead)
            for (m, p), v in reducer.items():
                u: Term = (mono_mul(m, q), p)
                if u == t:
                    continue
                old: CycloNum | None = work.get(u)
                new: CycloNum = -(c * v) if old is None else old - c * v
                if new:
                    if old is None:
                        heapq.heappush(heap, (key(u), u))
                    work[u] = new
                elif old is not None:
                    del work[u]
        return result

    def _terms_of(self, v: ModVec) -> TermDict:
        if v.rank != self.rank or v.nvars != self.nvars:
            raise DimensionError(f"vector of rank {v.rank} in {v.nvars} variables, expected rank {self.rank} in {self.nvars}")
        if v.field != self.field:
            raise FieldMismatchError(f"vector over {v.field}, expected {self.field}")
        return v.to_terms()

    def reduce(self, v: ModVec) -> ModVec:
        """Get the normal form of a vector.

        Args:
            v: Vector to reduce.

        Returns:
            A vector with no term divisible by a leading term of a reducer.

        """
        return ModVec.from_terms(self.field, self.nvars, self.rank, self._reduce(self._terms_of(v)))


def normal_form(v: ModVec, basis: Sequence[ModVec], order: ModuleOrder = TERM_OVER_POSITION) -> ModVec:
    """Reduce a vector by a list of vectors.

    Args:
        v: Vector to reduce.
        basis: Reducers; zero vectors are ignored.
        order: Module order.

    Returns:
        The fully reduced remainder; v minus it lies in the span of the basis.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> x, y = MultiPoly.variable(Q, 2, 0), MultiPoly.variable(Q, 2, 1)
        >>> zero = MultiPoly.zero(Q, 2)
        >>> str(normal_form(ModVec([x * x + y, zero]), [ModVec([x, zero])]))
        '(x2, 0)'

    """
    reducer: _Reducer = _Reducer(v.field, v.nvars, v.rank, order)
    for i, g in enumerate(basis):
        terms: TermDict = reducer._terms_of(g)
        if terms:
            lead: Term = order.leading(terms)
            reducer._register(i, lead, _monic(terms, lead))
    return reducer.reduce(v)


class GroebnerBasis(_Reducer):
    """An incrementally computed Gröbner basis of a submodule of S^r.

    Generators are added one at a time and S-pairs are processed by
    increasing degree, so a basis can be completed up to a degree bound.
    Redundant pairs are discarded with the Gebauer-Möller criteria.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> x, y = MultiPoly.variable(Q, 2, 0), MultiPoly.variable(Q, 2, 1)
        >>> gb = GroebnerBasis(Q, 2, 1)
        >>> gb.add(ModVec([x * y])), gb.add(ModVec([y * y]))
        (True, True)
        >>> gb.complete().spairs_reduce_to_zero()
        True
        >>> [str(v) for v in gb.elements()]
        ['(x1*x2)', '(x2^2)']

    """

    shifts: tuple[int, ...]
    """Degree of each free generator."""
    _elements: list[TermDict]
    """All monic elements ever inserted."""
    _leads: list[Term]
    """Leading term of each element."""
    _sugar: list[int]
    """Degree of each element."""
    _active: list[bool]
    """Whether an element is still needed for reduction."""
    _pairs: list[tuple[int, int, int]]
    """Heap of (degree, i, j) S-pairs."""
    _live: set[tuple[int, int]]
    """Pairs still to be processed."""

    def __init__(
        self,
        field: CycloField,
        nvars: int,
        rank: int,
        *,
        order: ModuleOrder = TERM_OVER_POSITION,
        shifts: Sequence[int] | None = None,
    ) -> None:
        """Initialize an empty basis.

        Args:
            field: Coefficient field.
            nvars: Number of ring variables.
            rank: Rank of the free module.
            order: Module order.
            shifts: Degrees of the free generators, all zero by default.

        """
        super().__init__(field, nvars, rank, order)
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank
        if len(self.shifts) != rank:
            raise DimensionError(f"{len(self.shifts)} shifts for rank {rank}")
        self._elements = []
        self._leads = []
        self._sugar = []
        self._active = []
        self._pairs = []
        self._live = set()

    def _degree(self, terms: TermDict) -> int:
        return max(sum(m) + self.shifts[p] for m, p in terms)

    def _insert(self, terms: TermDict) -> None:
        lead: Term = self.order.leading(terms)
        terms = _monic(terms, lead)
        mono, pos = lead
        h: int = len(self._elements)

        candidates: list[int] = [
            g for g, active in enumerate(self._active) if active and self._leads[g][1] == pos
        ]
        lcms: dict[int, Monomial] = {g: mono_lcm(self._leads[g][0], mono) for g in candidates}

        def coprime(g: int) -> bool:
            return self.rank == 1 and lcms[g] == mono_mul(self._leads[g][0], mono)

        pending: list[int] = list(candidates)
        kept: list[int] = []
        while pending:
            g1: int = pending.pop()
            lcm1: Monomial = lcms[g1]
            if coprime(g1) or not any(mono_divides(lcms[g2], lcm1) for g2 in pending + kept):
                kept.append(g1)
        new_pairs: list[int] = [g for g in kept if not coprime(g)]

        for i, j in list(self._live):
            if self._leads[i][1] != pos:
                continue
            lcm_ij: Monomial = mono_lcm(self._leads[i][0], self._leads[j][0])
            if (
                mono_divides(mono, lcm_ij)
                and mono_lcm(self._leads[i][0], mono) != lcm_ij
                and mono_lcm(self._leads[j][0], mono) != lcm_ij
            ):
                self._live.discard((i, j))

        for g in candidates:
            if mono_divides(mono, self._leads[g][0]):
                self._active[g] = False
                self._unregister(g, pos)

        self._elements.append(terms)
        self._leads.append(lead)
        self._sugar.append(self._degree(terms))
        self._active.append(True)
        self._register(h, lead, terms)

        for g in new_pairs:
            lcm: Monomial = lcms[g]
            degree: int = max(
                self._sugar[g] + sum(lcm) - sum(self._leads[g][0]),
                self._sugar[h] + sum(lcm) - sum(mono),
            )
            heapq.heappush(self._pairs, (degree, g, h))
            self._live.add((g, h))
        logger.debug(f"Inserted element {h} of degree {self._sugar[h]} with {len(new_pairs)} new pairs")

    def _spair(self, i: int, j: int) -> TermDict:
        (mi, _), (mj, _) = self._leads[i], self._leads[j]
        lcm: Monomial = mono_lcm(mi, mj)
        result: TermDict = _shift(self._elements[i], mono_div(lcm, mi))
        minus_one: CycloNum = -self.field.one()
        for t, c in _shift(self._elements[j], mono_div(lcm, mj), minus_one).items():
            s: CycloNum = result[t] + c if t in result else c
            if s:
                result[t] = s
            else:
                result.pop(t, None)
        return result

    def add(self, v: ModVec) -> bool:
        """Add a generator.

        Args:
            v: New generator.

        Returns:
            True if the generator did not reduce to zero against the current basis.

        """
        reduced: TermDict = self._reduce(self._terms_of(v))
        if not reduced:
            return False
        self._insert(reduced)
        return True

    def complete(self, max_degree: int | None = None) -> "GroebnerBasis":
        """Process pending S-pairs.

        Args:
            max_degree: Stop before pairs of higher degree; None processes all.

        Returns:
            This basis, for chaining.

        """
        processed: int = 0
        while self._pairs:
            degree, i, j = self._pairs[0]
            if max_degree is not None and degree > max_degree:
                break
            heapq.heappop(self._pairs)
            if (i, j) not in self._live:
                continue
            self._live.discard((i, j))
            processed += 1
            remainder: TermDict = self._reduce(self._spair(i, j))
            if remainder:
                self._insert(remainder)
        if processed:
            logger.debug(f"Processed {processed} S-pairs, basis has {len(self)} elements")
        return self

    def contains(self, v: ModVec) -> bool:
        """Check whether a vector reduces to zero.

        Exact for vectors of degree up to the completed degree.
        """
        return not self._reduce(self._terms_of(v))

    def __contains__(self, v: ModVec) -> bool:
        return self.contains(v)

    def __len__(self) -> int:
        return sum(self._active)

    def elements(self) -> list[ModVec]:
        """Get the active (minimal) basis elements, sorted by degree and leading term."""
        indices: list[int] = [g for g, active in enumerate(self._active) if active]
        indices.sort(key=lambda g: (self._sugar[g], self.order.key(self._leads[g])))
        return [ModVec.from_terms(self.field, self.nvars, self.rank, self._elements[g]) for g in indices]

    def _projected(self, start: int) -> list[ModVec]:
        """Get the active elements led at positions from start on, projected onto those positions."""
        result: list[ModVec] = []
        for g, active in enumerate(self._active):
            if active and self._leads[g][1] >= start:
                terms: TermDict = {(m, p - start): c for (m, p), c in self._elements[g].items()}
                result.append(ModVec.from_terms(self.field, self.nvars, self.rank - start, terms))
        return result

    def spairs_reduce_to_zero(self) -> bool:
        """Check the Buchberger criterion on every pair of active elements."""
        indices: list[int] = [g for g, active in enumerate(self._active) if active]
        for a, i in enumerate(indices):
            for j in indices[a + 1 :]:
                if self._leads[i][1] == self._leads[j][1] and self._reduce(self._spair(i, j)):
                    return False
        return True


def buchberger(gens: Sequence[ModVec], order: ModuleOrder = TERM_OVER_POSITION) -> GroebnerBasis:
    """Compute a Gröbner basis of the submodule generated by vectors.

    Args:
        gens: Nonzero generators over a common ring and rank.
        order: Module order.

    Returns:
        The completed basis.

    Raises:
        ValueError: If no generators are given.

    """
    if not gens:
        raise ValueError("cannot compute a Gröbner basis without generators")
    first: ModVec = gens[0]
    basis: GroebnerBasis = GroebnerBasis(first.field, first.nvars, first.rank, order=order)
    for g in sorted(gens, key=lambda v: v.degree):
        basis.add(g)
    return basis.complete()


class Submodule:
    """A submodule of S^r given by generators.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> x, y = MultiPoly.variable(Q, 2, 0), MultiPoly.variable(Q, 2, 1)
        >>> zero = MultiPoly.zero(Q, 2)
        >>> M = Submodule.from_generators([ModVec([x, zero]), ModVec([zero, y])])
        >>> ModVec([x, y]) in M, ModVec([y, zero]) in M
        (True, False)

    """

    field: CycloField
    """Coefficient field."""
    nvars: int
    """Number of ring variables."""
    rank: int
    """Rank of the ambient free module."""
    generators: tuple[ModVec, ...]
    """Nonzero generators."""

    def __init__(self, field: CycloField, nvars: int, rank: int, generators: Iterable[ModVec] = ()) -> None:
        """Initialize the submodule.

        Args:
            field: Coefficient field.
            nvars: Number of ring variables.
            rank: Rank of the ambient free module.
            generators: Generators; zero vectors are dropped.

        Raises:
            DimensionError: If a generator has the wrong rank or ring.

        """
        self.field = field
        self.nvars = nvars
        self.rank = rank
        gens: list[ModVec] = []
        for g in generators:
            if g.rank != rank or g.nvars != nvars:
                raise DimensionError(f"generator of rank {g.rank} in {g.nvars} variables for a submodule of rank {rank} in {nvars}")
            if g.field != field:
                raise FieldMismatchError(f"generator over {g.field} for a submodule over {field}")
            if g:
                gens.append(g)
        self.generators = tuple(gens)

    @classmethod
    def from_generators(cls, generators: Sequence[ModVec]) -> "Submodule":
        """Create a submodule from a nonempty list of generators."""
        if not generators:
            raise ValueError("cannot infer the ambient module from no generators")
        first: ModVec = generators[0]
        return cls(first.field, first.nvars, first.rank, generators)

    @property
    def graded(self) -> bool:
        """Whether every generator is homogeneous."""
        return all(g.pdeg is not None for g in self.generators)

    @property
    def degrees(self) -> list[int | None]:
        """The degrees of the generators."""
        return [g.pdeg for g in self.generators]

    @cached_property
    def groebner(self) -> GroebnerBasis:
        """The completed Gröbner basis, computed on first use."""
        basis: GroebnerBasis = GroebnerBasis(self.field, self.nvars, self.rank)
        for g in sorted(self.generators, key=lambda v: v.degree):
            basis.add(g)
        return basis.complete()

    def __contains__(self, v: ModVec) -> bool:
        return module_membership(v, self)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[ModVec]:
        return iter(self.generators)

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __repr__(self) -> str:
        return f"Submodule({str(self)!r})"


def free_module(field: CycloField, nvars: int, rank: int) -> Submodule:
    """Get S^rank as a submodule of itself."""
    return Submodule(field, nvars, rank, [ModVec.unit(field, nvars, rank, i) for i in range(rank)])


def module_membership(v: ModVec, module: Submodule) -> bool:
    """Check whether a vector lies in a submodule.

    Args:
        v: Vector.
        module: Submodule of the same free module.

    Returns:
        True iff the normal form of v with respect to the Gröbner basis is zero.

    """
    if not v:
        return True
    if not module.generators:
        return False
    return module.groebner.contains(v)


def syzygy_basis(gens: Sequence[ModVec]) -> Submodule:
    """Compute generators of the module of relations among vectors.

    Each generator g_i is extended by the free generator e_i of S^m; the
    elements of an elimination Gröbner basis that vanish on the original
    block are exactly a generating set of the syzygies.

    Args:
        gens: Nonzero vectors g_1, ..., g_m of a common free module.

    Returns:
        The submodule of S^m of all (a_1, ..., a_m) with sum a_i g_i = 0.

    Raises:
        ValueError: If no generators are given.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> x, y = MultiPoly.variable(Q, 2, 0), MultiPoly.variable(Q, 2, 1)
        >>> [str(s) for s in syzygy_basis([ModVec([x]), ModVec([y])])]
        ['(-x2, x1)']
        >>> [str(s) for s in syzygy_basis([ModVec([x]), ModVec([x])])]
        ['(1, -1)']

    """
    if not gens:
        raise ValueError("cannot compute syzygies of no generators")
    first: ModVec = gens[0]
    field, nvars, rank, count = first.field, first.nvars, first.rank, len(gens)
    shifts: list[int] = [0] * rank
    extended: list[ModVec] = []
    for i, g in enumerate(gens):
        if g.rank != rank:
            raise DimensionError(f"generators of rank {rank} and {g.rank}")
        shifts.append(g.pdeg if g.pdeg is not None else g.degree)
        extended.append(ModVec(list(g.components) + list(ModVec.unit(field, nvars, count, i).components)))
    basis: GroebnerBasis = GroebnerBasis(field, nvars, rank + count, order=ModuleOrder(split=rank), shifts=shifts)
    for i in sorted(range(count), key=lambda i: shifts[rank + i]):
        basis.add(extended[i])
    basis.complete()
    syzygies: list[ModVec] = basis._projected(rank)
    logger.debug(f"Found {len(syzygies)} syzygies among {count} generators")
    return Submodule(field, nvars, count, syzygies)


def module_intersect(m: Submodule, n: Submodule) -> Submodule:
    """Intersect two submodules of the same free module.

    A relation sum a_i m_i + sum b_j n_j = 0 between the generators yields
    the element sum a_i m_i of the intersection.

    Args:
        m: First submodule.
        n: Second submodule.

    Returns:
        Generators of the intersection.

    Raises:
        DimensionError: If the ambient modules differ.

    """
    if (m.rank, m.nvars) != (n.rank, n.nvars):
        raise DimensionError(f"submodules of rank {m.rank} and {n.rank} in {m.nvars} and {n.nvars} variables")
    if m.field != n.field:
        raise FieldMismatchError(f"submodules over {m.field} and {n.field}")
    if not m.generators or not n.generators:
        return Submodule(m.field, m.nvars, m.rank)
    gens: list[ModVec] = list(m.generators) + list(n.generators)
    elements: list[ModVec] = []
    for syzygy in syzygy_basis(gens):
        element: ModVec = ModVec.zero(m.field, m.nvars, m.rank)
        for coeff, g in zip(syzygy.components, m.generators):
            if coeff:
                element = element + g * coeff
        if element:
            elements.append(element)
    logger.debug(f"Intersected modules with {len(m)} and {len(n)} generators into {len(elements)} generators")
    return Submodule(m.field, m.nvars, m.rank, elements)


def minimal_generators(module: Submodule) -> list[ModVec]:
    """Select a minimal homogeneous generating set of a graded submodule.

    Generators are processed by increasing degree and kept only if they do
    not lie in the submodule generated by those kept before.

    Args:
        module: Graded submodule.

    Returns:
        Minimal generators, sorted by degree.

    Raises:
        NotHomogeneousError: If a generator is not homogeneous.

    Examples:
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> x, y = MultiPoly.variable(Q, 2, 0), MultiPoly.variable(Q, 2, 1)
        >>> zero = MultiPoly.zero(Q, 2)
        >>> M = Submodule.from_generators([ModVec([x * x, zero]), ModVec([x, zero]), ModVec([zero, y])])
        >>> [str(g) for g in minimal_generators(M)]
        ['(x1, 0)', '(0, x2)']

    """
    degrees: list[int | None] = module.degrees
    if any(d is None for d in degrees):
        raise NotHomogeneousError("minimal generators need homogeneous generators")
    ordered: list[ModVec] = [g for _, g in sorted(zip(degrees, module.generators), key=lambda p: p[0])]
    basis: GroebnerBasis = GroebnerBasis(module.field, module.nvars, module.rank)
    kept: list[ModVec] = []
    for g in ordered:
        basis.complete(max_degree=g.pdeg)
        if basis.add(g):
            kept.append(g)
    logger.debug(f"Minimalized {len(module)} generators to {len(kept)}")
    return kept


def minimalize(module: Submodule) -> Submodule:
    """Get the submodule with a minimal generating set."""
    return Submodule(module.field, module.nvars, module.rank, minimal_generators(module))


def intersect_all(modules: Iterable[Submodule], ambient: Submodule) -> Submodule:
    """Intersect submodules by a pairwise fold, minimalizing after each step.

    Args:
        modules: Submodules to intersect, folded in order.
        ambient: Result for an empty sequence of submodules.

    Returns:
        The intersection.

    """
    result: Submodule | None = None
    for step, module in enumerate(modules):
        result = module if result is None else module_intersect(result, module)
        if result.graded:
            result = minimalize(result)
        logger.debug(f"Fold step {step}: {len(result)} generators")
    return ambient if result is None else result
