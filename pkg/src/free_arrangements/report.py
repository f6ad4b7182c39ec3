"""Freeness reports and certificates."""

import json
import logging
import os
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Self

from tabulate import tabulate

from free_arrangements.errors import ChainError
from free_arrangements.field import CycloNum

if TYPE_CHECKING:
    from free_arrangements.derivation import Derivation


logger: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FreenessReport:
    """Result of a freeness decision for one arrangement.

    Examples:
        >>> report = FreenessReport(free=False, generator_count=4)
        >>> report.to_json()["free"], report.exponents
        (False, None)

    """

    free: bool
    """Whether the module of derivations is free."""
    generator_count: int
    """Number of minimal generators of the module of derivations."""
    exponents: tuple[int, ...] | None = None
    """Sorted degrees of a homogeneous basis, if free."""
    basis: "tuple[Derivation, ...] | None" = None
    """Homogeneous basis sorted by degree, if computed."""
    saito_constant: CycloNum | None = None
    """Scalar c with det M = c Q(A), if a basis was certified."""
    shortcut: bool = False
    """Whether freeness was decided from the essential rank alone."""

    def to_json(self) -> dict[str, Any]:
        """Convert the report to a JSON-serializable dictionary.

        Returns:
            A JSON-serializable dictionary representation of the report.

        """
        return {
            "free": self.free,
            "generator_count": self.generator_count,
            "exponents": list(self.exponents) if self.exponents is not None else None,
            "basis": [[str(c) for c in theta] for theta in self.basis] if self.basis is not None else None,
            "saito_constant": str(self.saito_constant) if self.saito_constant is not None else None,
            "shortcut": self.shortcut,
        }

    def to_string(self, **kwargs) -> str:
        """Get a human-readable table of the report.

        Args:
            kwargs: Additional arguments to pass to tabulate.

        """
        rows: list[tuple[str, str]] = [
            ("free", "yes" if self.free else "no"),
            ("generators", str(self.generator_count)),
        ]
        if self.exponents is not None:
            rows.append(("exponents", ", ".join(map(str, self.exponents))))
        if self.saito_constant is not None:
            rows.append(("saito constant", str(self.saito_constant)))
        if self.basis is not None:
            for i, theta in enumerate(self.basis):
                rows.append((f"basis {i}", str(theta)))
        if self.shortcut:
            rows.append(("decided by", "essential rank"))
        return tabulate(rows, **kwargs)


@dataclass(frozen=True)
class ChainStep:
    """One step of an inductive chain: adding a hyperplane to the prefix before it."""

    hyperplane: int
    """Index of the added hyperplane in the arrangement."""
    exponents: tuple[int, ...]
    """Exponents of the prefix after adding the hyperplane."""
    restriction_exponents: tuple[int, ...]
    """Exponents of the restriction of the prefix to the added hyperplane."""

    def to_json(self) -> dict[str, Any]:
        """Convert the step to a JSON-serializable dictionary."""
        return {
            "hyperplane": self.hyperplane,
            "exponents": list(self.exponents),
            "restriction_exponents": list(self.restriction_exponents),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        """Create a step from a JSON dictionary."""
        return cls(
            hyperplane=int(data["hyperplane"]),
            exponents=tuple(int(e) for e in data["exponents"]),
            restriction_exponents=tuple(int(e) for e in data["restriction_exponents"]),
        )


@dataclass(frozen=True)
class InductiveChain:
    """Certificate of inductive freeness: the order in which hyperplanes are added.

    Examples:
        >>> chain = InductiveChain((ChainStep(1, (0, 1), (0,)), ChainStep(0, (1, 1), (1,))))
        >>> chain.ordering, chain.step_exponents[-1]
        ((1, 0), (1, 1))
        >>> InductiveChain.from_json(chain.to_json()) == chain
        True

    """

    steps: tuple[ChainStep, ...]
    """Steps in order of addition."""

    @property
    def ordering(self) -> tuple[int, ...]:
        """Hyperplane indices in order of addition."""
        return tuple(step.hyperplane for step in self.steps)

    @property
    def step_exponents(self) -> tuple[tuple[int, ...], ...]:
        """Exponents of every nonempty prefix."""
        return tuple(step.exponents for step in self.steps)

    @property
    def restriction_exponents(self) -> tuple[tuple[int, ...], ...]:
        """Exponents of the restriction at every step."""
        return tuple(step.restriction_exponents for step in self.steps)

    @property
    def exponents(self) -> tuple[int, ...] | None:
        """Exponents of the whole arrangement, or None for an empty chain."""
        return self.steps[-1].exponents if self.steps else None

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> dict[str, Any]:
        """Convert the chain to a JSON-serializable dictionary."""
        return {"ordering": list(self.ordering), "steps": [step.to_json() for step in self.steps]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        """Create a chain from a JSON dictionary.

        Raises:
            ChainError: If the dictionary is not a chain certificate.

        """
        try:
            return cls(tuple(ChainStep.from_json(step) for step in data["steps"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ChainError(f"malformed chain certificate: {e}") from e

    @classmethod
    def load(cls, file: str | os.PathLike) -> Self:
        """Read a chain certificate from a JSON file."""
        logger.debug(f"Reading chain from file: {file}")
        with open(file, "r") as f:
            return cls.from_json(json.load(f))

    def store(self, file: str | os.PathLike) -> None:
        """Write the chain certificate to a JSON file."""
        with open(file, "w") as f:
            json.dump(self.to_json(), f, indent=2, sort_keys=True)

    def to_string(self, forms: list[str] | None = None, **kwargs) -> str:
        """Get a human-readable table of the chain.

        Args:
            forms: Optional printable forms of the hyperplanes, by index.
            kwargs: Additional arguments to pass to tabulate.

        """
        rows: list[dict[str, Any]] = []
        for step in self.steps:
            row: dict[str, Any] = {"hyperplane": step.hyperplane}
            if forms is not None:
                row["form"] = forms[step.hyperplane]
            row["exponents"] = ", ".join(map(str, step.exponents))
            row["restriction"] = ", ".join(map(str, step.restriction_exponents))
            rows.append(row)
        kwargs.setdefault("headers", "keys")
        kwargs.setdefault("showindex", "always")
        return tabulate(rows, **kwargs)


@dataclass(frozen=True)
class NodeReport:
    """Freeness of the restriction to one flat of the intersection lattice."""

    flat: str
    """Printable canonical form of the flat."""
    rank: int
    """Codimension of the flat."""
    size: int
    """Number of hyperplanes of the restriction."""
    report: FreenessReport
    """Freeness of the restriction."""
    consistent: bool | None
    """Whether the Poincaré polynomial of the restriction factors by its exponents; None if not free."""

    def to_json(self) -> dict[str, Any]:
        """Convert the node report to a JSON-serializable dictionary."""
        data: dict[str, Any] = {"flat": self.flat, "rank": self.rank, "hyperplanes": self.size}
        data.update(self.report.to_json())
        data["consistent"] = self.consistent
        return data


@dataclass(frozen=True)
class HereditaryReport:
    """Freeness of all restrictions of an arrangement.

    Examples:
        >>> node = NodeReport("V", 0, 2, FreenessReport(True, 2, (1, 1)), True)
        >>> HereditaryReport((node,)).free
        True

    """

    nodes: tuple[NodeReport, ...]
    """Reports sorted by rank and flat."""

    @property
    def free(self) -> bool:
        """Whether every restriction is free."""
        return all(node.report.free for node in self.nodes)

    @property
    def consistent(self) -> bool:
        """Whether every free restriction has a factoring Poincaré polynomial."""
        return all(node.consistent is not False for node in self.nodes)

    def __len__(self) -> int:
        return len(self.nodes)

    def to_json(self) -> dict[str, Any]:
        """Convert the report to a JSON-serializable dictionary."""
        return {
            "free": self.free,
            "consistent": self.consistent,
            "nodes": [node.to_json() for node in self.nodes],
        }

    def store(self, file: str | os.PathLike) -> None:
        """Write the report to a JSON file."""
        with open(file, "w") as f:
            json.dump(self.to_json(), f, indent=2, sort_keys=True)

    def to_string(self, **kwargs) -> str:
        """Get a human-readable table of the per-flat results.

        Args:
            kwargs: Additional arguments to pass to tabulate.

        """
        rows: list[dict[str, Any]] = [
            {
                "rank": node.rank,
                "flat": node.flat,
                "hyperplanes": node.size,
                "free": "yes" if node.report.free else "no",
                "exponents": ", ".join(map(str, node.report.exponents or ())),
                "shortcut": "yes" if node.report.shortcut else "",
            }
            for node in self.nodes
        ]
        kwargs.setdefault("headers", "keys")
        return tabulate(rows, **kwargs)
