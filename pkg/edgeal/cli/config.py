import logging
import os
from typing import ClassVar, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from edgeal.core.graphs import MAX_ENUMERATION_VERTICES
from edgeal.core.linalg import is_prime
from edgeal.theorems.registry import STATEMENTS, SweepRange

MAX_S = 5

InputKind = Literal["exhaustive", "graph6", "edges", "edge_file", "builtin"]


def default_log_level() -> str:
    return os.getenv("EDGEAL_LOG_LEVEL", "INFO").upper()


class RunConfig(BaseModel):
    """Validated settings for one `compute` or `verify` run."""

    model_config = ConfigDict(frozen=True)

    SOURCES: ClassVar[tuple[InputKind, ...]] = (
        "exhaustive",
        "graph6",
        "edges",
        "edge_file",
        "builtin",
    )

    exhaustive: int | None = None
    graph6: str | None = None
    edges: str | None = None
    edge_file: str | None = None
    builtin: str | None = None
    vertices: int | None = Field(None, ge=1)

    s_min: int = Field(1, ge=1, le=MAX_S)
    s_max: int = Field(2, ge=1, le=MAX_S)
    statements: tuple[str, ...] = ()
    timeout: float = Field(60.0, gt=0)
    jobs: int = Field(1, ge=1)
    characteristic: int = 0
    out: str | None = None
    use_cache: bool = True
    explore: bool = False
    betti: bool = False
    log_level: str = Field(default_factory=default_log_level)

    @field_validator("exhaustive")
    @classmethod
    def _exhaustive_size(cls, v: int | None) -> int | None:
        if v is not None and not 1 <= v <= MAX_ENUMERATION_VERTICES:
            raise ValueError(f"exhaustive n must be within 1..{MAX_ENUMERATION_VERTICES}")
        return v

    @field_validator("characteristic")
    @classmethod
    def _field_characteristic(cls, v: int) -> int:
        if v != 0 and not is_prime(v):
            raise ValueError(f"characteristic must be 0 or a prime, got {v}")
        return v

    @field_validator("statements")
    @classmethod
    def _known_statements(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        unknown = [s for s in v if s not in STATEMENTS]
        if unknown:
            raise ValueError(f"unknown statements: {', '.join(unknown)}")
        return v

    @field_validator("log_level")
    @classmethod
    def _log_level(cls, v: str) -> str:
        if not isinstance(logging.getLevelName(v.upper()), int):
            raise ValueError(f"unknown log level {v!r}")
        return v.upper()

    @model_validator(mode="after")
    def _consistent(self) -> "RunConfig":
        if self.s_min > self.s_max:
            raise ValueError(f"empty s range {self.s_min}..{self.s_max}")
        sources = [k for k in self.SOURCES if getattr(self, k) is not None]
        if len(sources) != 1:
            raise ValueError("exactly one input source is required")
        return self

    @property
    def source(self) -> InputKind:
        return next(k for k in self.SOURCES if getattr(self, k) is not None)

    @property
    def sweep_range(self) -> SweepRange:
        return SweepRange(self.s_min, self.s_max, self.explore)
