"""Validation logic for verify command."""

from typing import Optional

from walkforge.cli.utils import validate_engine
from walkforge.sdk.oracle import MAX_ORACLE_N


def validate(trials: int, max_n: int, prime: Optional[int], random_prime: bool,
             threads: Optional[int]) -> tuple[bool, str]:
    """Validate verify options, returns (is_valid, error_message)."""
    if trials < 1:
        return False, "--trials must be at least 1"
    if not 2 <= max_n <= MAX_ORACLE_N:
        return False, f"--max-n must lie in 2..{MAX_ORACLE_N}"
    return validate_engine(prime, random_prime, threads)
