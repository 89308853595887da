"""Validation logic for distance command."""

from typing import Optional

from walkforge.cli.utils import validate_engine


def validate(u: int, v: int, prime: Optional[int], random_prime: bool,
             threads: Optional[int]) -> tuple[bool, str]:
    if u < 0 or v < 0:
        return False, "Vertex ids must be non-negative"
    return validate_engine(prime, random_prime, threads)
