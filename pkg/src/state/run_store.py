"""
Quasi-Arc Toolkit - Run Ledger
------------------------------
Persists run manifests and log records to a SQLite database in WAL mode.
Enabled by QUASIARC_DB (or --db); a failing write is logged and skipped,
never raised.

Tables
------
runs  - one row per CLI invocation (command line, surface, counts, verdicts)
logs  - every log record emitted while a ledger is attached
"""

import json
import logging
import sqlite3
import threading
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .. import __version__

logger = logging.getLogger(__name__)


def _now() -> str:
    """Return current UTC time as ISO-8601 string (timezone-aware)."""
    return datetime.now(timezone.utc).isoformat()


@dataclass
class RunManifest:
    """Reproducibility record of one CLI run; only wall_time varies between runs."""

    command: list[str]
    surface: str | None = None
    counts: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    wall_time: float = 0.0
    version: str = __version__
    _started: float = field(default_factory=time.perf_counter, repr=False, compare=False)

    def stop(self) -> "RunManifest":
        self.wall_time = round(time.perf_counter() - self._started, 6)
        return self

    def to_dict(self) -> dict:
        data = asdict(self)
        data.pop("_started")
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


class RunStore:
    """
    SQLite ledger of quasiarc runs.

    Storage: SQLite database at `db_path`, parent directory created on demand
    Mode:    WAL, one connection per thread
    """

    def __init__(self, db_path: str):
        self.db_path = str(Path(db_path).resolve())
        Path(self.db_path).parent.mkdir(parents=True, exist_ok=True)
        # sqlite3 connections stay on the thread that opened them
        self._local = threading.local()
        self._init_schema()

    # ── Internal: connection management ──────────────────────────────────

    def _conn(self) -> sqlite3.Connection:
        if not getattr(self._local, "conn", None):
            conn = sqlite3.connect(self.db_path, check_same_thread=False, timeout=5.0)
            conn.row_factory = sqlite3.Row
            conn.execute("PRAGMA journal_mode=WAL")
            conn.execute("PRAGMA synchronous=NORMAL")
            self._local.conn = conn
        return self._local.conn

    def _init_schema(self):
        conn = self._conn()
        conn.executescript("""
            -- One row per CLI invocation; JSON columns hold the manifest parts
            CREATE TABLE IF NOT EXISTS runs (
                id          INTEGER PRIMARY KEY AUTOINCREMENT,
                command     TEXT    NOT NULL,      -- JSON list of argv
                surface     TEXT    DEFAULT '',
                counts      TEXT    NOT NULL,      -- JSON: arcs / facets / edges
                verdicts    TEXT    NOT NULL,      -- JSON: verifier results
                wall_time   REAL    NOT NULL,
                version     TEXT    NOT NULL,
                created_at  TEXT    NOT NULL
            );
            CREATE INDEX IF NOT EXISTS idx_runs_surface ON runs(surface);

            -- Structured log records
            -- event: bracket tag of the message (CLI, SHELL, STATE, ...)
            CREATE TABLE IF NOT EXISTS logs (
                id         INTEGER PRIMARY KEY AUTOINCREMENT,
                timestamp  TEXT    NOT NULL,
                level      TEXT    NOT NULL,
                event      TEXT    DEFAULT '',
                message    TEXT    NOT NULL
            );
            CREATE INDEX IF NOT EXISTS idx_logs_level ON logs(level);
            CREATE INDEX IF NOT EXISTS idx_logs_event ON logs(event);
        """)
        conn.commit()

    # ── Runs ──────────────────────────────────────────────────────────────

    def save_manifest(self, manifest: RunManifest) -> int | None:
        """Insert a manifest; returns the row id, or None when the write failed."""
        conn = self._conn()
        try:
            cur = conn.execute(
                """
                INSERT INTO runs (command, surface, counts, verdicts, wall_time, version, created_at)
                VALUES (?, ?, ?, ?, ?, ?, ?)
                """,
                (json.dumps(manifest.command), manifest.surface or "",
                 json.dumps(manifest.counts, sort_keys=True),
                 json.dumps(manifest.verdicts, sort_keys=True),
                 manifest.wall_time, manifest.version, _now())
            )
            conn.commit()
            return cur.lastrowid
        except sqlite3.Error as e:
            logger.error(f"[STATE] save_manifest failed: {e}")
            return None

    @staticmethod
    def _run_row(row: sqlite3.Row) -> dict:
        data = dict(row)
        for key in ("command", "counts", "verdicts"):
            data[key] = json.loads(data[key])
        return data

    def get_run(self, run_id: int) -> dict | None:
        conn = self._conn()
        try:
            row = conn.execute("SELECT * FROM runs WHERE id=?", (run_id,)).fetchone()
            return self._run_row(row) if row else None
        except sqlite3.Error as e:
            logger.error(f"[STATE] get_run failed: {e}")
            return None

    def recent_runs(self, surface: str | None = None, limit: int = 20) -> list[dict]:
        """Newest runs first, optionally for one surface."""
        conn = self._conn()
        where, params = ("WHERE surface = ?", [surface]) if surface else ("", [])
        params.append(limit)
        try:
            rows = conn.execute(
                f"SELECT * FROM runs {where} ORDER BY id DESC LIMIT ?", params
            ).fetchall()
        except sqlite3.Error as e:
            logger.error(f"[STATE] recent_runs failed: {e}")
            return []
        return [self._run_row(r) for r in rows]

    # ── Logs ──────────────────────────────────────────────────────────────

    def log_entry(self, level: str, message: str, event: str = ""):
        conn = self._conn()
        try:
            conn.execute(
                "INSERT INTO logs (timestamp, level, event, message) VALUES (?, ?, ?, ?)",
                (_now(), level.upper(), event, message)
            )
            conn.commit()
        except sqlite3.Error:
            # log writes must not recurse into logging
            pass

    def get_logs(self, level: str | None = None, event: str | None = None,
                 limit: int = 200) -> list[dict]:
        conn = self._conn()
        conditions = []
        params: list = []
        if level:
            conditions.append("level = ?")
            params.append(level.upper())
        if event:
            conditions.append("event = ?")
            params.append(event)
        where = ("WHERE " + " AND ".join(conditions)) if conditions else ""
        params.append(limit)
        rows = conn.execute(f"SELECT * FROM logs {where} ORDER BY id DESC LIMIT ?", params).fetchall()
        return [dict(r) for r in rows]

    def close(self):
        conn = getattr(self._local, "conn", None)
        if conn:
            conn.close()
            self._local.conn = None


class RunLogHandler(logging.Handler):
    """Copies log records into the ledger's `logs` table, tagged by the
    bracketed event name at the start of the message."""

    _EVENT_TAGS = [
        "CLI",
        "CENSUS",
        "COMPLEX",
        "FLIP",
        "SHELL",
        "CONSTRUCT",
        "DYCK",
        "ORACLE",
        "STATE",
        "CERT",
    ]

    def __init__(self, store: RunStore):
        super().__init__()
        self._store = store

    def _extract_event(self, message: str) -> str:
        for tag in self._EVENT_TAGS:
            if f"[{tag}]" in message:
                return tag
        return ""

    def emit(self, record):
        try:
            msg = self.format(record)
            self._store.log_entry(level=record.levelname, message=msg, event=self._extract_event(msg))
        except Exception:
            pass  # a ledger failure never aborts a run
