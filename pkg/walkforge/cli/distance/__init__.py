"""Distance command."""

from .command import distance_command

__all__ = ["distance_command"]
