"""Utility helpers for the walkforge SDK."""

import hashlib
import os
import time
from contextlib import contextmanager
from typing import Iterator, List, Optional

from .exceptions import ConfigError

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


def fnv1a64(data: bytes) -> int:
    """64-bit FNV-1a checksum."""
    h = FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * FNV_PRIME) & _MASK64
    return h


def short_hash(data: bytes) -> str:
    """First 16 hex digits of SHA-256."""
    return hashlib.sha256(data).hexdigest()[:16]


def resolve_threads(threads: Optional[int] = None) -> int:
    """Worker count: explicit value, then ``WALKFORGE_THREADS``, then the CPU count."""
    if threads:
        return max(1, int(threads))
    env = os.getenv("WALKFORGE_THREADS", "").strip()
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ConfigError(f"Invalid value for 'threads': {env!r}") from None
        if value < 1:
            raise ConfigError(f"threads must be positive, got {value}")
        return value
    return os.cpu_count() or 1


def parse_int_list(raw: str) -> List[int]:
    """Parse ``"128,256, 512"``."""
    return [int(part) for part in raw.split(",") if part.strip()]


@contextmanager
def stopwatch() -> Iterator[dict]:
    """Yields a dict whose ``seconds`` key is filled on exit."""
    record = {"seconds": 0.0}
    start = time.perf_counter()
    try:
        yield record
    finally:
        record["seconds"] = time.perf_counter() - start


__all__ = ["fnv1a64", "short_hash", "resolve_threads", "parse_int_list", "stopwatch"]
