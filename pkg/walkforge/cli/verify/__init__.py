"""Verify command."""

from .command import verify_command

__all__ = ["verify_command"]
