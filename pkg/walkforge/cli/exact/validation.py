"""Validation logic for exact command."""

from typing import List, Optional, Tuple

from sympy import isprime

from walkforge.sdk.utils import parse_int_list


def validate(u: int, v: int, primes: Optional[str], bound: Optional[int]) -> Tuple[bool, str, List[int]]:
    """Validate exact options, returns (is_valid, error_message, parsed_primes)."""
    if u < 0 or v < 0:
        return False, "Vertex ids must be non-negative", []
    if bound is not None and bound < 1:
        return False, "--bound must be positive", []
    if primes is None:
        return True, "", []
    try:
        parsed = parse_int_list(primes)
    except ValueError:
        return False, f"--primes must be a comma-separated list of integers, got {primes!r}", []
    if not parsed:
        return False, "--primes is empty", []
    composite = [q for q in parsed if not isprime(q)]
    if composite:
        return False, f"Not prime: {', '.join(map(str, composite))}", []
    return True, "", parsed
