"""
Phase 6: Settings

Runtime defaults come from environment variables (main.py loads a `.env`
file into the environment first with python-dotenv). Command-line flags
override whatever is loaded here.

Keys:
    LAZARD_CAD_SEED       probe seed                       (default 0)
    LAZARD_CAD_PROBES     delineability probes per cell    (default 8)
    LAZARD_CAD_OUTPUT     json | text                      (default text)
    LAZARD_CAD_LOG_LEVEL  logging level name               (default WARNING)
    LAZARD_CAD_WORKERS    lifting threads                  (default 1)
"""

import logging
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from phase_5.cad import DEFAULT_WORKERS
from phase_5.delineability import DEFAULT_PROBES, DEFAULT_SEED

logger = logging.getLogger(__name__)

DEFAULT_OUTPUT = "text"
DEFAULT_LOG_LEVEL = "WARNING"
OUTPUT_FORMATS = ("json", "text")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
ENV_PREFIX = "LAZARD_CAD_"


@dataclass(frozen=True)
class Settings:
    """
    Attributes:
        seed:      Seed for delineability probe points.
        probes:    Probe points per cell.
        output:    "json" or "text".
        log_level: Logging level name.
        workers:   Threads used to lift one level.
    """
    seed: int = DEFAULT_SEED
    probes: int = DEFAULT_PROBES
    output: str = DEFAULT_OUTPUT
    log_level: str = DEFAULT_LOG_LEVEL
    workers: int = DEFAULT_WORKERS

    def __post_init__(self):
        _check_choice("OUTPUT", self.output, OUTPUT_FORMATS)
        _check_choice("LOG_LEVEL", self.log_level, LOG_LEVELS)
        if self.probes < 0:
            raise ValueError(f"{ENV_PREFIX}PROBES must be non-negative, got {self.probes}")
        if self.workers < 1:
            raise ValueError(f"{ENV_PREFIX}WORKERS must be positive, got {self.workers}")

    def override(self, **changes) -> "Settings":
        """Copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _check_choice(key: str, value: str, choices) -> None:
    if value not in choices:
        raise ValueError(f"{ENV_PREFIX}{key} must be one of {', '.join(choices)}, got {value!r}")


def _read_int(env: Mapping[str, str], key: str, default: int) -> int:
    raw = env.get(ENV_PREFIX + key)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_PREFIX}{key} must be an integer, got {raw!r}") from None


def load_settings(env: Optional[Mapping[str, str]] = None) -> Settings:
    """Settings from `env` (default: the process environment)."""
    env = os.environ if env is None else env
    settings = Settings(
        seed=_read_int(env, "SEED", DEFAULT_SEED),
        probes=_read_int(env, "PROBES", DEFAULT_PROBES),
        output=env.get(ENV_PREFIX + "OUTPUT", DEFAULT_OUTPUT).strip().lower(),
        log_level=env.get(ENV_PREFIX + "LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper(),
        workers=_read_int(env, "WORKERS", DEFAULT_WORKERS),
    )
    logger.debug(f"Loaded settings: {settings}")
    return settings
