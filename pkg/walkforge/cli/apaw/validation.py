"""Validation logic for apaw command."""

from typing import Optional

from walkforge.cli.utils import validate_engine


def validate(output: Optional[str], fmt: str, prime: Optional[int], random_prime: bool,
             threads: Optional[int]) -> tuple[bool, str]:
    if fmt == "per-k" and output is None:
        return False, "--format per-k writes one file per length and needs --output"
    return validate_engine(prime, random_prime, threads)
