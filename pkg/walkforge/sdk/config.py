"""Configuration loading for the walkforge SDK."""

import os
from configparser import ConfigParser
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, TypeVar

from .exceptions import ConfigError

T = TypeVar("T")

DEFAULT_PRIME = 998244353
DEFAULT_RETRIES = 8


def config_home() -> Path:
    """Directory holding config.ini (``$WALKFORGE_HOME`` or ``~/.walkforge``)."""
    override = os.getenv("WALKFORGE_HOME")
    return Path(override) if override else Path.home() / ".walkforge"


def _parse_bool(raw: str) -> bool:
    value = raw.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off", ""):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


def _parse_optional_int(raw: str) -> Optional[int]:
    raw = raw.strip()
    if raw.lower() in ("", "none", "off"):
        return None
    return int(raw)


@dataclass
class Config:
    prime: int = DEFAULT_PRIME
    random_prime: bool = False
    seed: int = 0
    threads: Optional[int] = None
    retries: int = DEFAULT_RETRIES
    strassen_threshold: Optional[int] = None
    fallback: bool = False

    @classmethod
    def load(cls) -> "Config":
        """Load config from env/file with defaults."""
        file_values = {}
        config_file = config_home() / "config.ini"
        if config_file.exists():
            parser = ConfigParser()
            parser.read(config_file)
            if parser.has_section("engine"):
                file_values = dict(parser.items("engine"))

        def resolve(key: str, cast: Callable[[str], T], default: T) -> T:
            raw = os.getenv(f"WALKFORGE_{key.upper()}")
            if raw is None:
                raw = file_values.get(key)
            if raw is None:
                return default
            try:
                return cast(raw)
            except ValueError as e:
                raise ConfigError(f"Invalid value for '{key}': {e}") from e

        config = cls(
            prime=resolve("prime", int, DEFAULT_PRIME),
            random_prime=resolve("random_prime", _parse_bool, False),
            seed=resolve("seed", int, 0),
            threads=resolve("threads", _parse_optional_int, None),
            retries=resolve("retries", int, DEFAULT_RETRIES),
            strassen_threshold=resolve("strassen_threshold", _parse_optional_int, None),
            fallback=resolve("fallback", _parse_bool, False),
        )
        config.validate()
        return config

    def validate(self) -> None:
        if self.retries < 1:
            raise ConfigError(f"retries must be positive, got {self.retries}")
        if self.threads is not None and self.threads < 1:
            raise ConfigError(f"threads must be positive, got {self.threads}")
        if self.strassen_threshold is not None and self.strassen_threshold < 2:
            raise ConfigError(f"strassen_threshold must be at least 2, got {self.strassen_threshold}")


__all__ = ["Config", "config_home", "DEFAULT_PRIME", "DEFAULT_RETRIES"]
