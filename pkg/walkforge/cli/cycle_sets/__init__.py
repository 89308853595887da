"""Cycle sets command."""

from .command import cycle_sets_command

__all__ = ["cycle_sets_command"]
