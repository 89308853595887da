"""Validation logic for bench command."""

from typing import List, Optional, Tuple

from walkforge.cli.utils import validate_engine
from walkforge.sdk.utils import parse_int_list


def validate(graph: Optional[str], sizes: Optional[str], density: float, prime: Optional[int],
             random_prime: bool, threads: Optional[int]) -> Tuple[bool, str, List[int]]:
    """Validate bench options, returns (is_valid, error_message, parsed_sizes)."""
    if graph and sizes:
        return False, "Specify either GRAPH or --sizes, not both", []
    if not 0.0 <= density <= 1.0:
        return False, "--density must lie in [0, 1]", []
    parsed: List[int] = []
    if not graph:
        try:
            parsed = parse_int_list(sizes or "128,256,512")
        except ValueError:
            return False, f"--sizes must be a comma-separated list of integers, got {sizes!r}", []
        if not parsed or min(parsed) < 1:
            return False, "--sizes must list positive vertex counts", []
    valid, error = validate_engine(prime, random_prime, threads)
    return valid, error, parsed
