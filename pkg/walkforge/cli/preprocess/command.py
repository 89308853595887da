"""Preprocess command implementation."""

from typing import Optional

import click

from walkforge.cli import ui
from walkforge.cli.utils import build_client, check, emit_json, engine_options, fail, handle_errors, run_action
from . import validation
from .actions import PreprocessAction


@click.command("preprocess")
@click.argument("graph", type=click.Path(dir_okay=False))
@click.option("--output", "-o", required=True, type=click.Path(dir_okay=False), help="Index file to write")
@engine_options
@handle_errors
def preprocess_command(graph: str, output: str, prime: Optional[int], random_prime: bool,
                       seed: Optional[int], threads: Optional[int]):
    """Compute the Frobenius form of GRAPH and write a walk index."""

    # Validate
    valid, error = validation.validate(graph, output, prime, random_prime, threads)
    if not valid:
        fail(error)

    # Execute
    ctx = {"client": build_client(prime, random_prime, seed, threads), "graph": graph, "output": output}
    result = ui.load("Preprocessing", lambda: run_action(PreprocessAction(), ctx))
    check(result)

    ui.success(f"✓ Index written to {output}")
    ui.metrics(n=result.data["n"], mu=result.data["mu"], blocks=len(result.data["degrees"]), p=result.data["p"])
    emit_json(result.data)
