"""Run settings, read from a TOML file and overridden by command-line flags."""

import dataclasses
import logging
import os
import tomllib
from dataclasses import dataclass
from typing import Any, Self


logger: logging.Logger = logging.getLogger(__name__)


TABLE: str = "free-arrangements"
"""Name of the TOML table holding the settings."""


@dataclass(frozen=True)
class Configuration:
    """Settings of a run.

    Examples:
        >>> config = Configuration().merge(jobs=4, audit=None)
        >>> config.jobs, config.audit
        (4, False)

    """

    jobs: int = 1
    """Number of worker processes."""
    audit: bool = False
    """Whether chain verification recomputes freeness at every step."""
    max_degree: int = 6
    """Largest degree compared by the oracle."""
    show_process: bool = False
    """Whether to show progress bars."""
    log_level: str = "WARNING"
    """Logging level name."""
    json: bool = False
    """Whether to emit JSON reports."""

    def __post_init__(self) -> None:
        if self.jobs < 1:
            raise ValueError(f"jobs must be positive, got {self.jobs}")
        if self.max_degree < 0:
            raise ValueError(f"max_degree must be non-negative, got {self.max_degree}")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        """Create settings from a dictionary.

        Raises:
            ValueError: If the dictionary has unknown keys.

        """
        known: set[str] = {f.name for f in dataclasses.fields(cls)}
        unknown: list[str] = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"unknown configuration keys: {', '.join(unknown)}")
        return cls(**data)

    def merge(self, **overrides: Any) -> Self:
        """Get a copy with the given settings replaced; None values are ignored."""
        return dataclasses.replace(self, **{k: v for k, v in overrides.items() if v is not None})


def load(file: str | os.PathLike) -> Configuration:
    """Load settings from the `[free-arrangements]` table of a TOML file.

    Args:
        file: TOML file to load the settings from.

    Returns:
        Settings from the file, with defaults for missing keys.

    """
    logger.debug(f"Loading configuration from file: {file}")
    with open(file, "rb") as f:
        data: dict[str, Any] = tomllib.load(f)
    return Configuration.from_dict(data.get(TABLE, {}))
