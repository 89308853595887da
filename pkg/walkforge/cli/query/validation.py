"""Validation logic for query command."""

from typing import Optional

from walkforge.cli.utils import validate_engine


def validate(
    u: int,
    v: int,
    k: Optional[int],
    all_lengths: bool,
    upto: Optional[int],
    prime: Optional[int],
    random_prime: bool,
    threads: Optional[int],
) -> tuple[bool, str]:
    """Validate query options, returns (is_valid, error_message)."""
    chosen = sum([k is not None, all_lengths, upto is not None])
    if chosen != 1:
        return False, "Specify exactly one of --k, --all or --upto"
    if u < 0 or v < 0:
        return False, "Vertex ids must be non-negative"
    for name, value in (("--k", k), ("--upto", upto)):
        if value is not None and value < 1:
            return False, f"{name} must be at least 1"
    return validate_engine(prime, random_prime, threads)
