"""Memo tables for arrangement computations."""

from free_arrangements.caches.hash import HashCache


__all__: list[str] = [
    "HashCache",
]
