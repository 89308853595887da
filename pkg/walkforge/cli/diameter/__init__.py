"""Diameter report command."""

from .command import diameter_command

__all__ = ["diameter_command"]
