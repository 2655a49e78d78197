import os
import tempfile
from dataclasses import asdict, dataclass
from typing import Mapping, Optional

from .errors import ConfigError


def _int_from_env(environ: Mapping[str, str], name: str, default: int) -> int:
    raw = environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    log_file: str
    log_level: str
    max_threads: int = 1
    bruteforce_cap: int = 28
    minweight_budget: int = 10_000_000
    debug_port: Optional[int] = None

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        env = os.environ if environ is None else environ
        return cls(
            log_file=env.get(
                "SDCODES_LOG_FILE", os.path.join(tempfile.gettempdir(), "sdcodes.log")
            ),
            log_level=env.get("SDCODES_LOG_LEVEL", "INFO"),
            max_threads=_int_from_env(env, "SDCODES_MAX_THREADS", 1),
            bruteforce_cap=_int_from_env(env, "SDCODES_BRUTEFORCE_CAP", 28),
            minweight_budget=_int_from_env(env, "SDCODES_MINWEIGHT_BUDGET", 10_000_000),
            debug_port=_int_from_env(env, "SDCODES_DEBUG_PORT", 0) or None,
        )

    def dict(self):
        return asdict(self)
