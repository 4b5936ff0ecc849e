"""lrc.config

Environment-driven configuration shared by the oracle, the good-polynomial
search and the CLI. Values are read at call time so they can be overridden
per process (or per test with monkeypatch).
"""

import logging
import os

logger = logging.getLogger(__name__)

# ----- CONFIG -----
DEFAULT_EXHAUSTIVE_CAP = 1 << 25
DEFAULT_FIELD_CAP = 1 << 20
DEFAULT_WORKERS = 4
DEFAULT_SEARCH_BUDGET = 10 ** 6
DEFAULT_SEARCH_SEED = 0
DEFAULT_LOG_LEVEL = "WARNING"


def _int_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw, 0)
    except ValueError:
        logger.warning("ignoring non-integer %s=%r", name, raw)
        return default
    return value if value > 0 else default


def exhaustive_cap() -> int:
    """Largest q^k the oracle will enumerate."""
    return _int_env("LRC_EXHAUSTIVE_CAP", DEFAULT_EXHAUSTIVE_CAP)


def field_cap() -> int:
    """Largest field order enumerate_elements will list."""
    return _int_env("LRC_FIELD_CAP", DEFAULT_FIELD_CAP)


def workers() -> int:
    return _int_env("LRC_WORKERS", DEFAULT_WORKERS)


def search_budget() -> int:
    return _int_env("LRC_SEARCH_BUDGET", DEFAULT_SEARCH_BUDGET)


def search_seed() -> int:
    raw = os.environ.get("LRC_SEARCH_SEED")
    try:
        return int(raw) if raw else DEFAULT_SEARCH_SEED
    except ValueError:
        return DEFAULT_SEARCH_SEED


def log_level() -> str:
    return os.environ.get("LRC_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()
