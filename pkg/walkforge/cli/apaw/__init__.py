"""All-pairs all-walks command."""

from .command import apaw_command

__all__ = ["apaw_command"]
