"""ANSC command implementation."""

from typing import Optional

import click

from walkforge.cli import ui
from walkforge.cli.utils import (
    build_client,
    check,
    emit_json,
    engine_options,
    fail,
    handle_errors,
    run_action,
    validate_engine,
)
from .actions import AnscAction


@click.command("ansc")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@engine_options
@handle_errors
def ansc_command(source: str, prime: Optional[int], random_prime: bool, seed: Optional[int],
                 threads: Optional[int]):
    """Shortest cycle length through every vertex (null when there is none)."""

    valid, error = validate_engine(prime, random_prime, threads)
    if not valid:
        fail(error)

    ctx = {"client": build_client(prime, random_prime, seed, threads), "source": source}
    result = check(ui.load("Computing shortest cycles", lambda: run_action(AnscAction(), ctx)))
    emit_json(result.data)
