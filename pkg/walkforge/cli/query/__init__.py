"""Query command."""

from .command import query_command

__all__ = ["query_command"]
