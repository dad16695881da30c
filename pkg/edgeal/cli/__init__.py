from .config import RunConfig
from .corpus import builtin_families, load_graphs, parse_builtin

__all__ = ["RunConfig", "builtin_families", "load_graphs", "parse_builtin"]
