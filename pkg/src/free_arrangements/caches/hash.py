"""Hash-based memo table."""

import logging
import threading
from typing import Generator

from free_arrangements.arrangement import Arrangement
from free_arrangements.cache import Cache


logger: logging.Logger = logging.getLogger(__name__)


class HashCache[V](Cache[V]):
    """Hash-based cache keyed by the canonical form of an arrangement.

    Examples:
        >>> from free_arrangements.arrangement import arrangement_make
        >>> from free_arrangements.field import field_make
        >>> Q = field_make(1)
        >>> cache = HashCache()
        >>> cache[arrangement_make(Q, 2, [[1, 0], [0, 1]])] = "free"
        >>> arrangement_make(Q, 2, [[0, 1], [1, 0]]) in cache
        True
        >>> cache.insert_if_absent(arrangement_make(Q, 2, [[0, 1], [2, 0]]), "other")
        'free'
        >>> print(cache)
        Hash Cache

    """

    _data: dict[tuple, tuple[Arrangement, V]]
    """Cache data: canonical key to the first arrangement stored and its value."""
    _lock: threading.Lock
    """Guards insert-if-absent."""

    def __init__(self) -> None:
        """Initialize the hash-based cache."""
        self._data = {}
        self._lock = threading.Lock()

    def __str__(self) -> str:
        """Get a string representation of the cache."""
        return "Hash Cache"

    def __getitem__(self, key: Arrangement) -> V:
        """Get the cached value for the given arrangement.

        Args:
            key: Arrangement to look up.

        Returns:
            Cached value.

        Raises:
            KeyError: If the arrangement is not in the cache.

        """
        logger.debug(f"Cache lookup for {len(key)} hyperplanes")

        if key.key not in self._data:
            raise KeyError(f"{key} not found")
        return self._data[key.key][1]

    def __setitem__(self, key: Arrangement, value: V) -> None:
        """Set the cached value for the given arrangement.

        Args:
            key: Arrangement to cache.
            value: Value to cache.

        """
        with self._lock:
            self._data[key.key] = (key, value)

    def __contains__(self, key: object) -> bool:
        """Check if the arrangement is in the cache.

        Args:
            key: Arrangement to check.

        Returns:
            True if the arrangement is in the cache, False otherwise.

        """
        if not isinstance(key, Arrangement):
            return False
        return key.key in self._data

    def __delitem__(self, key: object) -> None:
        """Delete the cached value for the given arrangement.

        Args:
            key: Arrangement to delete.

        Raises:
            KeyError: If the arrangement is not in the cache.

        """
        if not isinstance(key, Arrangement) or key.key not in self._data:
            raise KeyError(f"{key} not found")
        with self._lock:
            del self._data[key.key]

    def __iter__(self) -> Generator[Arrangement, None, None]:
        """Iterate over the arrangements in the cache."""
        yield from [arrangement for arrangement, _ in list(self._data.values())]

    def __len__(self) -> int:
        """Get the number of arrangements in the cache."""
        return len(self._data)

    def insert_if_absent(self, key: Arrangement, value: V) -> V:
        """Atomically store a value unless the arrangement already has one.

        Args:
            key: Arrangement to cache.
            value: Value to store if absent.

        Returns:
            The value stored for the arrangement after the call.

        """
        with self._lock:
            return self._data.setdefault(key.key, (key, value))[1]

    def clear(self) -> None:
        """Clear the cache."""
        logger.debug("Clearing cache")

        with self._lock:
            self._data.clear()

    def to_string(self) -> str:
        """Get a string representation of the cache."""
        output: list[str] = ["HashCache contents:"]
        for arrangement, value in self._data.values():
            output.append(f"{arrangement}: {value}")
        return "\n".join(output)
