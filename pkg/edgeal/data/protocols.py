from typing import Protocol

from edgeal.data.models import CacheKey, CacheStats


class ResultCache(Protocol):
    """Protocol for persisting isomorphism-invariant computed values."""

    def get(self, key: CacheKey) -> str | None: ...
    def put(self, key: CacheKey, value: str) -> None: ...
    def stats(self) -> CacheStats: ...
