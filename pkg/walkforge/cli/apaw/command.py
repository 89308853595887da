"""APAW command implementation."""

from typing import Optional

import click

from walkforge.cli import ui
from walkforge.cli.utils import build_client, check, emit_json, engine_options, fail, handle_errors, run_action
from . import validation
from .actions import StreamApawAction, WriteApawAction


@click.command("apaw")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--output", "-o", type=click.Path(file_okay=False), default=None,
              help="Directory to write into (default: stream JSON lines to stdout)")
@click.option("--format", "fmt", type=click.Choice(["jsonl", "per-k"]), default="jsonl", show_default=True,
              help="JSON line per pair, or k_<k>.txt per length")
@engine_options
@handle_errors
def apaw_command(source: str, output: Optional[str], fmt: str, prime: Optional[int], random_prime: bool,
                 seed: Optional[int], threads: Optional[int]):
    """Walk counts of every length up to the horizon for every ordered pair."""

    valid, error = validation.validate(output, fmt, prime, random_prime, threads)
    if not valid:
        fail(error)

    ctx = {"client": build_client(prime, random_prime, seed, threads), "source": source,
           "output": output, "format": fmt}

    if output is None:
        result = check(run_action(StreamApawAction(), ctx))
        ui.dim(f"{result.data['records']} records")
        return

    result = check(ui.load("Writing APAW", lambda: run_action(WriteApawAction(), ctx)))
    ui.success(f"Wrote {len(result.data['files'])} file(s) to {output}")
    emit_json(result.data)
