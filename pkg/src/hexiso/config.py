"""Runtime configuration - defaults for worker count, seed and log level.

Values come from optional environment variables (a ``.env`` file is honoured
through python-dotenv).  Explicit arguments always win; nothing here is
required for the library to work.
"""

import logging
import os
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_SEED = 42
DEFAULT_LOG_LEVEL = "WARNING"

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

_DOTENV_LOADED = False


def load_environment() -> None:
    """Load ``.env`` once per process."""
    global _DOTENV_LOADED
    if not _DOTENV_LOADED:
        load_dotenv()
        _DOTENV_LOADED = True


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer; ignoring.", name, raw)
        return None


def resolve_threads(explicit: Optional[int] = None) -> int:
    """Pick the worker count: explicit arg, then ``HEXISO_THREADS``, then CPUs.

    Values below 1 fall back to 1 with a warning.
    """
    value = explicit if explicit is not None else _env_int("HEXISO_THREADS")
    if value is None:
        value = os.cpu_count() or 1
    if value < 1:
        logger.warning("thread count %d is below 1; using 1.", value)
        value = 1
    return value


def resolve_seed(explicit: Optional[int] = None) -> int:
    """Pick the sampling seed: explicit arg, then ``HEXISO_SEED``, then 42."""
    if explicit is not None:
        return explicit
    value = _env_int("HEXISO_SEED")
    return DEFAULT_SEED if value is None else value


def resolve_log_level(explicit: Optional[str] = None) -> str:
    """Pick the log level name: explicit arg, then ``HEXISO_LOG_LEVEL``."""
    raw = explicit if explicit is not None else os.getenv("HEXISO_LOG_LEVEL")
    if not raw:
        return DEFAULT_LOG_LEVEL
    level = raw.strip().upper()
    if level not in _LOG_LEVELS:
        logger.warning(
            "log level %r is not one of %s; using %s.",
            raw,
            ", ".join(_LOG_LEVELS),
            DEFAULT_LOG_LEVEL,
        )
        return DEFAULT_LOG_LEVEL
    return level


__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_LOG_LEVEL",
    "load_environment",
    "resolve_threads",
    "resolve_seed",
    "resolve_log_level",
]
