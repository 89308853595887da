"""Exception hierarchy for the walkforge SDK."""

from typing import Optional


class WalkForgeError(Exception):
    """Base exception for walkforge."""

    exit_code = 1


# Input and IO

class ConfigError(WalkForgeError):
    """Invalid configuration value."""


class EdgeListParseError(WalkForgeError):
    """Malformed edge list file."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class IndexFormatError(WalkForgeError):
    """Corrupt, truncated or incompatible index file."""


# Contract violations

class ContractError(WalkForgeError):
    """A documented precondition or postcondition does not hold."""

    exit_code = 2


class ZeroInverse(ContractError):
    """Inverse of zero requested."""


class LengthOverflow(ContractError):
    """Transform length exceeds what the modulus supports."""


class DimensionMismatch(ContractError):
    """Matrix or vector shapes are incompatible."""


class Singular(ContractError):
    """Matrix is not invertible."""


class DecompositionFailure(ContractError):
    """Frobenius decomposition did not verify within the retry budget."""


class HorizonExceeded(ContractError):
    """Walk length beyond the index horizon."""

    def __init__(self, k: int, mu: int):
        self.k = k
        self.mu = mu
        super().__init__(f"Length {k} exceeds index horizon mu={mu} (use --fallback)")


class BoundTooSmall(ContractError):
    """Prime product too small to reconstruct exact counts."""


class SizeGuard(ContractError):
    """Input too large for a brute-force routine."""


class VertexOutOfRange(ContractError):
    """Vertex id outside [0, n)."""


# Verification

class VerificationMismatch(WalkForgeError):
    """Production result disagrees with the brute-force oracle."""

    exit_code = 3

    def __init__(self, message: str, instance: Optional[str] = None):
        self.instance = instance
        super().__init__(message)


__all__ = [
    "WalkForgeError",
    "ConfigError",
    "EdgeListParseError",
    "IndexFormatError",
    "ContractError",
    "ZeroInverse",
    "LengthOverflow",
    "DimensionMismatch",
    "Singular",
    "DecompositionFailure",
    "HorizonExceeded",
    "BoundTooSmall",
    "SizeGuard",
    "VertexOutOfRange",
    "VerificationMismatch",
]
