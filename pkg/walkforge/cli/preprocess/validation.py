"""Validation logic for preprocess command."""

from typing import Optional

from walkforge.cli.utils import validate_engine


def validate(graph: str, output: str, prime: Optional[int], random_prime: bool,
             threads: Optional[int]) -> tuple[bool, str]:
    """Validate preprocess options, returns (is_valid, error_message)."""
    if graph == output:
        return False, "Refusing to overwrite the input graph with the index"
    return validate_engine(prime, random_prime, threads)
