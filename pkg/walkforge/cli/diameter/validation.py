"""Validation logic for diameter command."""

from typing import Optional

from walkforge.cli.utils import validate_engine


def validate(source: Optional[str], audit: Optional[int], n: int, density: float, prime: Optional[int],
             random_prime: bool, threads: Optional[int]) -> tuple[bool, str]:
    if (source is None) == (audit is None):
        return False, "Specify either SOURCE or --audit COUNT"
    if audit is not None:
        if audit < 1:
            return False, "--audit must be at least 1"
        if n < 2:
            return False, "--n must be at least 2"
        if not 0.0 <= density <= 1.0:
            return False, "--density must lie in [0, 1]"
    return validate_engine(prime, random_prime, threads)
