"""Bench command implementation."""

from typing import Optional

import click

from walkforge.cli import ui
from walkforge.cli.utils import build_client, check, emit_json, engine_options, fail, handle_errors, run_action
from . import display, validation
from .actions import BenchAction


@click.command("bench")
@click.argument("graph", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--sizes", default=None, help="Comma-separated sizes of random graphs [default: 128,256,512]")
@click.option("--density", type=float, default=0.05, show_default=True, help="Arc density of random graphs")
@click.option("--baseline/--no-baseline", default=True, show_default=True,
              help="Also time the iterated-product baseline")
@engine_options
@handle_errors
def bench_command(graph: Optional[str], sizes: Optional[str], density: float, baseline: bool,
                  prime: Optional[int], random_prime: bool, seed: Optional[int], threads: Optional[int]):
    """Time APAW against the naive product baseline."""

    valid, error, parsed = validation.validate(graph, sizes, density, prime, random_prime, threads)
    if not valid:
        fail(error)

    ctx = {"client": build_client(prime, random_prime, seed, threads), "graph": graph, "sizes": parsed,
           "density": density, "baseline": baseline}
    result = check(ui.load("Benchmarking", lambda: run_action(BenchAction(), ctx)))

    rows = result.data["rows"]
    ui.print(display.build_bench_table(rows))
    emit_json({**result.data, "rows": [row.to_dict() for row in rows]})
