"""All-nodes shortest cycles command."""

from .command import ansc_command

__all__ = ["ansc_command"]
