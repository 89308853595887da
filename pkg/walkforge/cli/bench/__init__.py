"""Bench command."""

from .command import bench_command

__all__ = ["bench_command"]
