from typing import Literal, TypeAlias

# Bit i set means vertex x_{i+1} is a member.
VertexSet: TypeAlias = int
Edge: TypeAlias = tuple[int, int]
Exponents: TypeAlias = tuple[int, ...]
Multidegree: TypeAlias = tuple[int, ...]
Regularity: TypeAlias = int

# Checker outcome types
Status: TypeAlias = Literal["pass", "fail", "not_applicable", "timeout"]

MAX_VERTICES = 32
MAX_EXPONENT = 0xFFFF
