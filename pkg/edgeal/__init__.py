from .core.errors import (
    AmbientMismatchError,
    ComputationTimeout,
    ConventionError,
    Graph6DecodeError,
    InvalidEdgeError,
    SizeGuardError,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatchError",
    "ComputationTimeout",
    "ConventionError",
    "Graph6DecodeError",
    "InvalidEdgeError",
    "SizeGuardError",
]
