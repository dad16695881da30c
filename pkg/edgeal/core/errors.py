import time


class AmbientMismatchError(ValueError):
    """Raised when monomials or ideals over different variable counts are combined."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(f"Ambient mismatch: {left} variables vs {right} variables")
        self.left = left
        self.right = right


class SizeGuardError(ValueError):
    """Raised when an input exceeds the bound an exhaustive algorithm was written for."""


class ConventionError(ValueError):
    """Raised where the zero or unit ideal would need an unstated convention."""


class InvalidEdgeError(ValueError):
    """Raised when a checker receives a vertex pair that is not an edge."""


class Graph6DecodeError(ValueError):
    """Raised for malformed graph6 input; `offset` is the offending byte position."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class ComputationTimeout(RuntimeError):
    """Raised by long-running kernels when their cooperative deadline has passed."""


def check_deadline(deadline: float | None, where: str) -> None:
    """Raise ComputationTimeout if the monotonic `deadline` has passed."""
    if deadline is not None and time.monotonic() > deadline:
        raise ComputationTimeout(f"Deadline exceeded in {where}")
