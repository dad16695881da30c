import pytest

from edgeal.cli.corpus import complete, cycle, example42, path
from edgeal.core.graphs import Graph
from edgeal.data.models import CacheKey, CacheStats
from edgeal.data.protocols import ResultCache


def pytest_runtest_setup(item: pytest.Item) -> None:
    """
    Hook to enforce docstring standards on all test functions.
    Fails the test if it lacks a docstring or a 'Why:' justification.
    """
    if isinstance(item, pytest.Function):
        doc = item.obj.__doc__
        if not doc:
            pytest.fail(f"Test '{item.name}' is missing a docstring.")

        if "Why:" not in doc:
            pytest.fail(
                f"Test '{item.name}' docstring missing 'Why:' justification section.\n"
                f"Current docstring:\n{doc}"
            )


class MemoryResultCache(ResultCache):
    def __init__(self) -> None:
        self.values: dict[CacheKey, str] = {}
        self.hits = 0
        self.misses = 0
        self.writes = 0

    def get(self, key: CacheKey) -> str | None:
        if key in self.values:
            self.hits += 1
            return self.values[key]
        self.misses += 1
        return None

    def put(self, key: CacheKey, value: str) -> None:
        self.values[key] = value
        self.writes += 1

    def stats(self) -> CacheStats:
        return CacheStats(
            hits=self.hits, misses=self.misses, writes=self.writes, entries=len(self.values)
        )


@pytest.fixture
def memory_cache() -> MemoryResultCache:
    return MemoryResultCache()


@pytest.fixture
def k3() -> Graph:
    return complete(3)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def p3() -> Graph:
    return path(3)


@pytest.fixture
def single_edge() -> Graph:
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def example_graph() -> Graph:
    """Two triangles joined by a path of length two (7 vertices)."""
    return example42()
