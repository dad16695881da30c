import logging
import os
import sqlite3
import threading

from edgeal.data.models import CacheKey, CacheStats

# Matches the ResultCache protocol structurally; mypy checks compatibility at call sites.

logger = logging.getLogger(__name__)

DEFAULT_CACHE_DIR = os.path.join("~", ".cache", "edgeal")
CACHE_FILE = "results.db"


def default_cache_dir() -> str:
    return os.path.expanduser(os.getenv("EDGEAL_CACHE_DIR") or DEFAULT_CACHE_DIR)


class SQLiteResultCache:
    """SQLite implementation of ResultCache."""

    def __init__(self, db_path: str | None = None) -> None:
        if db_path is None:
            cache_dir = default_cache_dir()
            os.makedirs(cache_dir, exist_ok=True)
            db_path = os.path.join(cache_dir, CACHE_FILE)
        self.db_path = db_path
        self.conn = sqlite3.connect(db_path, check_same_thread=False)
        self.conn.row_factory = sqlite3.Row
        self._lock = threading.Lock()
        self._stats = CacheStats()
        self._create_tables()
        logger.debug(f"Opened result cache at {db_path}")

    def _create_tables(self) -> None:
        self.conn.execute("""
            CREATE TABLE IF NOT EXISTS result (
                graph_key TEXT,
                operation TEXT,
                params TEXT,
                characteristic INTEGER,
                value TEXT,
                PRIMARY KEY (graph_key, operation, params, characteristic)
            )
        """)
        self.conn.commit()

    def get(self, key: CacheKey) -> str | None:
        with self._lock:
            row = self.conn.execute(
                """
                SELECT value FROM result
                WHERE graph_key = ? AND operation = ? AND params = ? AND characteristic = ?
            """,
                (key.graph_key, key.operation, key.params, key.characteristic),
            ).fetchone()
            if row is None:
                self._stats.misses += 1
                return None
            self._stats.hits += 1
            return str(row["value"])

    def put(self, key: CacheKey, value: str) -> None:
        with self._lock:
            self.conn.execute(
                """
                INSERT OR REPLACE INTO result
                (graph_key, operation, params, characteristic, value)
                VALUES (?, ?, ?, ?, ?)
            """,
                (key.graph_key, key.operation, key.params, key.characteristic, value),
            )
            self.conn.commit()
            self._stats.writes += 1

    def stats(self) -> CacheStats:
        with self._lock:
            count = self.conn.execute("SELECT COUNT(*) FROM result").fetchone()[0]
        return CacheStats(
            hits=self._stats.hits,
            misses=self._stats.misses,
            writes=self._stats.writes,
            entries=int(count),
        )

    def close(self) -> None:
        self.conn.close()
