"""Exact command implementation."""

from typing import Optional

import click

from walkforge.cli import ui
from walkforge.cli.utils import build_client, check, emit_json, fail, handle_errors, run_action
from . import validation
from .actions import ExactCountsAction


@click.command("exact")
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.option("-u", "u", type=int, required=True, help="Start vertex")
@click.option("-v", "v", type=int, required=True, help="End vertex")
@click.option("--primes", default=None, help="Comma-separated distinct primes, e.g. 998244353,167772161")
@click.option("--bound", type=int, default=None, help="Upper bound on any count (default: n^mu)")
@click.option("--seed", type=int, default=None, help="Seed for the decompositions")
@handle_errors
def exact_command(graph: str, u: int, v: int, primes: Optional[str], bound: Optional[int], seed: Optional[int]):
    """Exact walk counts from U to V over several primes."""

    valid, error, parsed = validation.validate(u, v, primes, bound)
    if not valid:
        fail(error)

    ctx = {"client": build_client(seed=seed), "graph": graph, "u": u, "v": v, "primes": parsed, "bound": bound}
    result = check(ui.load("Reconstructing exact counts", lambda: run_action(ExactCountsAction(), ctx)))
    ui.dim(f"Primes: {', '.join(map(str, result.data['primes']))}")
    emit_json(result.data)
