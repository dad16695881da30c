from dataclasses import dataclass


@dataclass(frozen=True)
class CacheKey:
    graph_key: str  # canonical graph6, or labeled graph6 beyond the canonical-form guard
    operation: str  # e.g. "reg_symbolic_power"
    params: str  # e.g. "s=3"
    characteristic: int = 0


@dataclass
class CacheStats:
    hits: int = 0
    misses: int = 0
    writes: int = 0
    entries: int = 0
