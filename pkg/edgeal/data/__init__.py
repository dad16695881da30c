from .graph6 import decode_graph6, encode_graph6
from .models import CacheKey, CacheStats
from .protocols import ResultCache
from .sqlite import SQLiteResultCache

__all__ = [
    "CacheKey",
    "CacheStats",
    "ResultCache",
    "SQLiteResultCache",
    "decode_graph6",
    "encode_graph6",
]
