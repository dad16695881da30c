import json
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class BaseSchema(BaseModel):
    """Base schema with common configuration."""

    model_config = ConfigDict(populate_by_name=True, from_attributes=True)


class BettiEntryRecord(BaseSchema):
    i: int
    multidegree: list[int]
    total_degree: int
    rank: int


class CheckRecord(BaseSchema):
    """One checker verdict; emitted by `edgeal verify`."""

    record: str = "check"
    statement: str
    graph_id: str
    graph6: str | None = None
    n: int
    params: dict[str, Any] = Field(default_factory=dict)
    status: str
    hypothesis: dict[str, Any] | None = None
    witness: dict[str, Any] = Field(default_factory=dict)


class PowerRecord(BaseSchema):
    s: int
    reg_power: int | None = None
    reg_symbolic: int | None = None
    gens_power: int
    gens_symbolic: int
    equal: bool


class ComputeRecord(BaseSchema):
    """Invariants of one graph; emitted by `edgeal compute`."""

    record: str = "compute"
    graph_id: str
    n: int
    edges: list[list[int]]
    status: str = "ok"
    zero_ideal: bool
    reg_edge: int | None = None
    gens_edge: int
    odd_girth: int | None
    bipartite: bool
    chordal: bool
    co_chordal: bool
    gap_free: bool
    characteristic: int = 0
    powers: list[PowerRecord] = Field(default_factory=list)
    betti: list[BettiEntryRecord] | None = None


class SummaryRow(BaseSchema):
    statement: str
    passed: int = Field(0, alias="pass")
    failed: int = Field(0, alias="fail")
    not_applicable: int = 0
    timeout: int = 0


def dump_record(record: BaseSchema) -> str:
    """Compact JSON with sorted keys, one record per line."""
    return json.dumps(record.model_dump(by_alias=True), sort_keys=True, separators=(",", ":"))


def json_schema() -> dict[str, Any]:
    return {
        model.__name__: model.model_json_schema(by_alias=True)
        for model in (CheckRecord, ComputeRecord, BettiEntryRecord, SummaryRow)
    }
