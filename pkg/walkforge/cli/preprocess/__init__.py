"""Preprocess command."""

from .command import preprocess_command

__all__ = ["preprocess_command"]
