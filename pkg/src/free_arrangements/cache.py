"""Abstract memo table keyed by arrangements."""

import logging
from abc import abstractmethod
from collections.abc import MutableMapping
from typing import Generator

from free_arrangements.arrangement import Arrangement


logger: logging.Logger = logging.getLogger(__name__)


class Cache[V](MutableMapping[Arrangement, V]):
    """Abstract cache class.

    Arrangements are keys as sets of hyperplanes: two arrangements with the
    same hyperplanes in different orders share an entry.
    """

    @abstractmethod
    def __str__(self) -> str:
        """Get a string representation of the cache."""
        pass

    @abstractmethod
    def __getitem__(self, key: Arrangement) -> V:
        """Get the value for the given arrangement.

        Args:
            key: Arrangement to look up.

        """
        pass

    @abstractmethod
    def __setitem__(self, key: Arrangement, value: V) -> None:
        """Set the value for the given arrangement.

        Args:
            key: Arrangement to cache.
            value: Value to cache.

        """
        pass

    @abstractmethod
    def __contains__(self, key: object) -> bool:
        """Check if the cache contains the given arrangement.

        Args:
            key: Arrangement to check.

        """
        pass

    @abstractmethod
    def __delitem__(self, key: object) -> None:
        """Delete the value for the given arrangement.

        Args:
            key: Arrangement to delete.

        """
        pass

    @abstractmethod
    def __iter__(self) -> Generator[Arrangement, None, None]:
        """Iterate over the arrangements in the cache."""
        pass

    @abstractmethod
    def __len__(self) -> int:
        """Get the number of arrangements in the cache."""
        pass

    @abstractmethod
    def insert_if_absent(self, key: Arrangement, value: V) -> V:
        """Atomically store a value unless the arrangement already has one.

        Args:
            key: Arrangement to cache.
            value: Value to store if absent.

        Returns:
            The value stored for the arrangement after the call.

        """
        pass

    @abstractmethod
    def clear(self) -> None:
        """Clear the cache."""
        pass

    @abstractmethod
    def to_string(self) -> str:
        """Get a string representation of the cache."""
        pass
