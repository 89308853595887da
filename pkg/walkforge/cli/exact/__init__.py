"""Exact (multi-prime) walk count command."""

from .command import exact_command

__all__ = ["exact_command"]
