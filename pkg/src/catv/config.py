"""Size-cap configuration: explicit value, then ``CATV_CAP``, then the default."""
from __future__ import annotations

import os
from typing import Optional

from .base import ConfigError, SizeCapError, logger

DEFAULT_CAP = 1_000_000
CAP_ENV_VAR = "CATV_CAP"

_override: Optional[int] = None


def _parse_cap(raw: str, origin: str) -> int:
    try:
        value = int(raw.replace("_", ""))
    except ValueError as e:
        raise ConfigError(f"{origin}: expected a positive integer, got {raw!r}") from e
    if value <= 0:
        raise ConfigError(f"{origin}: cap must be positive, got {value}")
    return value


def set_cap(value: Optional[int]) -> None:
    """Install a process-wide cap (used by ``--cap``); ``None`` clears it."""
    global _override
    if value is not None and value <= 0:
        raise ConfigError(f"--cap must be positive, got {value}")
    _override = value


def resolve_cap(cap: Optional[int] = None) -> int:
    if cap is not None:
        if cap <= 0:
            raise ConfigError(f"cap must be positive, got {cap}")
        return cap
    if _override is not None:
        return _override
    raw = os.environ.get(CAP_ENV_VAR)
    if raw:
        return _parse_cap(raw, CAP_ENV_VAR)
    return DEFAULT_CAP


def ensure_within_cap(what: str, count: int, cap: Optional[int] = None) -> int:
    """Raise ``SizeCapError`` when ``count`` exceeds the resolved cap."""
    limit = resolve_cap(cap)
    if count > limit:
        raise SizeCapError(what, count, limit)
    logger.debug("%s: %d elements (cap %d)", what, count, limit)
    return limit
