"""Hereditary and inductive freeness, and Addition-Deletion bookkeeping."""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from tqdm import tqdm
from tqdm.contrib.logging import logging_redirect_tqdm

from free_arrangements.arrangement import Arrangement, LinearForm, Restriction, Subspace
from free_arrangements.cache import Cache
from free_arrangements.caches import HashCache
from free_arrangements.derivation import is_free, q_surjective
from free_arrangements.errors import ChainError, DimensionError, PreconditionError
from free_arrangements.field import Scalar
from free_arrangements.lattice import IntersectionLattice, IntPoly, poincare_poly
from free_arrangements.report import (
    ChainStep,
    FreenessReport,
    HereditaryReport,
    InductiveChain,
    NodeReport,
)


logger: logging.Logger = logging.getLogger(__name__)


type Exponents = tuple[int, ...]
"""Sorted exponent multiset."""


def addition_deletion_pattern(
    exponents: Iterable[int], deleted: Iterable[int], restricted: Iterable[int]
) -> bool:
    """Check the exponent pattern of the Addition-Deletion theorem.

    The pattern holds when exp A = {b_1, ..., b_(l-1), b},
    exp A' = {b_1, ..., b_(l-1), b - 1} and exp A'' = {b_1, ..., b_(l-1)}.

    Args:
        exponents: Exponents of A.
        deleted: Exponents of the deletion A'.
        restricted: Exponents of the restriction A''.

    Returns:
        Whether the three multisets match the pattern.

    Raises:
        DimensionError: If the sizes are not l, l and l - 1.

    Examples:
        >>> addition_deletion_pattern([1, 1], [0, 1], [1])
        True
        >>> addition_deletion_pattern([0, 1, 2], [0, 1, 1], [0, 1])
        True
        >>> addition_deletion_pattern([1, 3], [1, 1], [1])
        False

    """
    a, d, r = Counter(exponents), Counter(deleted), Counter(restricted)
    if a.total() != d.total() or a.total() != r.total() + 1:
        raise DimensionError(f"exponent multisets of sizes {a.total()}, {d.total()}, {r.total()}")
    if not (r <= a and r <= d):
        return False
    (b,) = (a - r).elements()
    (c,) = (d - r).elements()
    return c == b - 1


def exponent_obstruction(exponents: Iterable[int], restricted: Iterable[int]) -> bool:
    """Check whether the restriction exponents fail to be a sub-multiset of exp A.

    When this holds, Addition-Deletion cannot pass through the hyperplane,
    and the deletion of a free arrangement is not free.

    Examples:
        >>> exponent_obstruction([1, 3, 5], [1, 4])
        True
        >>> exponent_obstruction([0, 1, 2], [0, 1])
        False

    """
    return not Counter(restricted) <= Counter(exponents)


def _shortcut_exponents(arrangement: Arrangement) -> Exponents | None:
    """Exponents of an arrangement of essential rank at most 2, else None."""
    rank: int = arrangement.essential_rank
    zeros: Exponents = (0,) * (arrangement.dim - rank)
    match rank:
        case 0:
            return zeros
        case 1:
            return zeros + (1,)
        case 2:
            return zeros + (1, len(arrangement) - 1)
    return None


def _consistent(arrangement: Arrangement, exponents: Exponents) -> bool:
    essential: Arrangement = arrangement.essentialize().arrangement
    return poincare_poly(essential) == IntPoly.from_exponents(b for b in exponents if b)


def is_hereditarily_free(
    arrangement: Arrangement, *, jobs: int = 1, show_process: bool = False
) -> HereditaryReport:
    """Decide freeness of the restriction to every flat of the intersection lattice.

    Restrictions of essential rank at most 2 are free with exponents
    {1, |A^X| - 1} plus zeros, and are recorded without computation.

    Args:
        arrangement: The arrangement.
        jobs: Number of worker processes for the remaining restrictions.
        show_process: Whether to show a progress bar.

    Returns:
        One report per flat, sorted by rank and flat.

    Examples:
        >>> from free_arrangements.catalog import boolean
        >>> report = is_hereditarily_free(boolean(3))
        >>> report.free, len(report), report.consistent
        (True, 8, True)

    """
    lattice: IntersectionLattice = IntersectionLattice(arrangement)
    flats: list[Subspace] = list(lattice)
    restricted: list[Arrangement] = [arrangement.restrict(x).arrangement for x in flats]

    reports: dict[int, FreenessReport] = {}
    pending: list[int] = []
    for i, a in enumerate(restricted):
        exponents: Exponents | None = _shortcut_exponents(a)
        if exponents is None:
            pending.append(i)
        else:
            reports[i] = FreenessReport(free=True, generator_count=a.dim, exponents=exponents, shortcut=True)
    logger.info(f"{len(flats)} flats, {len(pending)} restrictions need a module computation")

    with logging_redirect_tqdm():
        pbar: tqdm | None = None
        if show_process:
            pbar = tqdm(total=len(pending), desc="Checking restrictions", unit="flats", dynamic_ncols=True)

        results: Iterator[FreenessReport]
        if jobs > 1 and len(pending) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                results = executor.map(is_free, [restricted[i] for i in pending])
                for i, report in zip(pending, results):
                    reports[i] = report
                    if pbar is not None:
                        pbar.update(1)
        else:
            for i in pending:
                reports[i] = is_free(restricted[i])
                if pbar is not None:
                    pbar.update(1)

        if pbar is not None:
            pbar.close()

    nodes: list[NodeReport] = []
    for i, (x, a) in enumerate(zip(flats, restricted)):
        report: FreenessReport = reports[i]
        consistent: bool | None = None
        if report.free:
            consistent = _consistent(a, report.exponents)
            if not consistent:
                logger.warning(f"Poincaré polynomial of the restriction to {x} does not factor by {report.exponents}")
        nodes.append(NodeReport(str(x), x.rank, len(a), report, consistent))
    result: HereditaryReport = HereditaryReport(tuple(nodes))
    logger.info(f"Hereditarily free: {result.free}")
    return result


@dataclass(frozen=True)
class _Found:
    """A successful inductive search: exponents and the steps reaching them."""

    exponents: Exponents
    steps: tuple[tuple[LinearForm, Exponents, Exponents], ...]


def _added_exponents(deleted: Exponents, restricted: Exponents) -> Exponents | None:
    """Exponents given by the Addition theorem, or None if exp A'' is not inside exp A'."""
    d, r = Counter(deleted), Counter(restricted)
    if not r <= d:
        return None
    (c,) = (d - r).elements()
    return tuple(sorted([*restricted, c + 1]))


class _InductiveSearch:
    """Depth-first search for an inductive chain, memoized on canonical arrangements."""

    cache: Cache[_Found | None] | None
    visited: int

    def __init__(self, cache: Cache[_Found | None] | None) -> None:
        self.cache = cache
        self.visited = 0

    def search(self, arrangement: Arrangement) -> _Found | None:
        if self.cache is not None and arrangement in self.cache:
            return self.cache[arrangement]
        result: _Found | None = self._search(arrangement)
        if self.cache is not None:
            result = self.cache.insert_if_absent(arrangement, result)
        return result

    def _search(self, arrangement: Arrangement) -> _Found | None:
        self.visited += 1
        if not len(arrangement):
            return _Found((0,) * arrangement.dim, ())
        if poincare_poly(arrangement).linear_factors() is None:
            logger.debug(f"Pruned {len(arrangement)} hyperplanes: Poincaré polynomial does not factor")
            return None

        restrictions: list[tuple[int, LinearForm, Arrangement]] = []
        for i, h in enumerate(arrangement):
            restrictions.append((i, h, arrangement.restrict(h).arrangement))
        restrictions.sort(key=lambda item: (len(item[2]), item[0]))

        for _, h, restricted in restrictions:
            deleted: _Found | None = self.search(arrangement.delete(h))
            if deleted is None:
                continue
            below: _Found | None = self.search(restricted)
            if below is None:
                continue
            exponents: Exponents | None = _added_exponents(deleted.exponents, below.exponents)
            if exponents is None:
                continue
            logger.debug(f"Added {h} to {len(arrangement) - 1} hyperplanes: exponents {exponents}")
            return _Found(exponents, deleted.steps + ((h, exponents, below.exponents),))
        return None


def is_inductively_free(
    arrangement: Arrangement, cache: Cache[_Found | None] | None = None, *, memoize: bool = True
) -> InductiveChain | None:
    """Search for an inductive chain of an arrangement.

    A is inductively free iff it is empty, or some hyperplane H has A - H
    and A^H inductively free with exp A^H inside exp (A - H). Hyperplanes
    are tried by increasing size of their restriction, and arrangements
    whose Poincaré polynomial does not factor are pruned.

    Args:
        arrangement: The arrangement.
        cache: Memo table keyed by canonical arrangements; reused across calls.
        memoize: Whether to create a fresh memo table when none is given.

    Returns:
        A chain certificate, or None if the arrangement is not inductively free.

    Examples:
        >>> from free_arrangements.catalog import braid
        >>> chain = is_inductively_free(braid(3))
        >>> chain.exponents, len(chain)
        ((0, 1, 2), 3)

    """
    if cache is None and memoize:
        cache = HashCache()
    searcher: _InductiveSearch = _InductiveSearch(cache)
    found: _Found | None = searcher.search(arrangement)
    logger.info(f"Inductive search visited {searcher.visited} arrangements")
    if found is None:
        return None
    return InductiveChain(
        tuple(ChainStep(arrangement.index(h), exps, res) for h, exps, res in found.steps)
    )


def chain_verify(arrangement: Arrangement, chain: InductiveChain, *, audit: bool = False) -> bool:
    """Replay an inductive chain.

    Every step must satisfy the Addition-Deletion pattern against the
    previous prefix, with as many restricted hyperplanes as the restriction
    exponents add up to. In audit mode every prefix and restriction is also
    checked with a module computation.

    Args:
        arrangement: The arrangement.
        chain: The chain certificate.
        audit: Whether to recompute freeness of every prefix and restriction.

    Returns:
        Whether every step passes.

    Raises:
        ChainError: If the chain does not add every hyperplane exactly once.

    Examples:
        >>> from free_arrangements.catalog import boolean
        >>> A = boolean(2)
        >>> chain_verify(A, InductiveChain((ChainStep(0, (0, 1), (0,)), ChainStep(1, (1, 1), (1,)))))
        True
        >>> chain_verify(A, InductiveChain((ChainStep(1, (1, 1), (1,)), ChainStep(0, (0, 1), (0,)))))
        False

    """
    if sorted(chain.ordering) != list(range(len(arrangement))):
        raise ChainError(f"chain {list(chain.ordering)} does not order the {len(arrangement)} hyperplanes")
    dim: int = arrangement.dim
    previous: Exponents = (0,) * dim
    prefix: Arrangement = Arrangement(arrangement.field, dim, ())
    for number, step in enumerate(chain.steps):
        h: LinearForm = arrangement[step.hyperplane]
        prefix = prefix.add(h)
        restriction: Restriction = prefix.restrict(h)
        try:
            pattern: bool = addition_deletion_pattern(step.exponents, previous, step.restriction_exponents)
        except DimensionError:
            pattern = False
        if not pattern or sum(step.restriction_exponents) != len(restriction.arrangement):
            logger.info(f"Chain step {number} adding {h} breaks the exponent pattern")
            return False
        if audit:
            prefix_report: FreenessReport = is_free(prefix)
            restricted_report: FreenessReport = is_free(restriction.arrangement)
            if prefix_report.exponents != tuple(sorted(step.exponents)) or restricted_report.exponents != tuple(
                sorted(step.restriction_exponents)
            ):
                logger.info(f"Chain step {number} adding {h} fails the audit")
                return False
        previous = step.exponents
    return True


def deletion_free_via_q(arrangement: Arrangement, hyperplane: LinearForm | Sequence[Scalar]) -> bool:
    """Decide freeness of A - H for a free A with free restriction A^H.

    The deletion is decided by a module computation and cross-checked with
    the deletion theorem (A - H is free iff exp A^H lies inside exp A) and
    with surjectivity of the restriction map D(A) -> D(A^H).

    Args:
        arrangement: A free arrangement.
        hyperplane: A hyperplane of the arrangement.

    Returns:
        Whether the deletion is free.

    Raises:
        PreconditionError: If A or A^H is not free.
        LatticeError: If the hyperplane is not in the arrangement.

    Examples:
        >>> from free_arrangements.catalog import boolean
        >>> deletion_free_via_q(boolean(2), [1, 0])
        True

    """
    h: LinearForm = arrangement[arrangement.index(hyperplane)]
    report: FreenessReport = is_free(arrangement)
    if not report.free:
        raise PreconditionError(f"{arrangement} is not free")
    restricted: FreenessReport = is_free(arrangement.restrict(h).arrangement)
    if not restricted.free:
        raise PreconditionError(f"the restriction of {arrangement} to {h} is not free")

    deleted: bool = is_free(arrangement.delete(h)).free
    predicted: bool = not exponent_obstruction(report.exponents, restricted.exponents)
    if predicted != deleted:
        logger.warning(f"Deletion of {h}: exponents predict {predicted}, module computation gives {deleted}")
    surjective: bool = q_surjective(arrangement, h)
    if surjective != deleted:
        logger.warning(f"Deletion of {h}: restriction map surjective is {surjective}, deletion free is {deleted}")
    return deleted
