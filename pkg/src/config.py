"""
Quasi-Arc Toolkit - Runtime Settings
------------------------------------
Values come from the process environment (optionally populated from .env or
.env.template by the CLI). Every knob has a default so the library works with
no configuration at all.

Variables
---------
QUASIARC_MAX_FACETS  - cap on the facet count of a requested complex
QUASIARC_MAX_N       - largest n accepted for mobius:n
QUASIARC_MAX_FACES   - cap on distinct faces enumerated for f-vectors
QUASIARC_BRUTE_CAP   - facet cap for brute-force shelling search
QUASIARC_DB          - SQLite run ledger path ('' disables the ledger)
QUASIARC_LOG_LEVEL   - logging level name for the CLI
"""

import os
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError


def load_environment(root: Path | None = None) -> Path | None:
    """Load .env (or .env.template) from `root`; return the file used, if any."""
    try:
        from dotenv import load_dotenv
    except ImportError:
        return None
    root = Path(root or Path(__file__).parent.parent).resolve()
    for name in (".env", ".env.template"):
        candidate = root / name
        if candidate.exists():
            load_dotenv(candidate)
            return candidate
    return None


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from e
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    max_facets: int = 250_000
    max_mobius_n: int = 9
    max_faces: int = 5_000_000
    brute_cap: int = 12
    db_path: str = ""
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            max_facets=_int_env("QUASIARC_MAX_FACETS", cls.max_facets),
            max_mobius_n=_int_env("QUASIARC_MAX_N", cls.max_mobius_n),
            max_faces=_int_env("QUASIARC_MAX_FACES", cls.max_faces),
            brute_cap=_int_env("QUASIARC_BRUTE_CAP", cls.brute_cap),
            db_path=os.getenv("QUASIARC_DB", "").strip(),
            log_level=os.getenv("QUASIARC_LOG_LEVEL", cls.log_level).strip().upper() or cls.log_level,
        )
