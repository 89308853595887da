"""Verify command implementation."""

from typing import Optional

import click

from walkforge.cli import ui
from walkforge.cli.utils import build_client, check, emit_json, engine_options, fail, handle_errors, run_action
from . import validation
from .actions import VerifyGraphAction, VerifyRandomAction


@click.command("verify")
@click.argument("graph", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--trials", "-t", type=int, default=100, show_default=True, help="Random graphs to check")
@click.option("--max-n", type=int, default=20, show_default=True, help="Largest random graph")
@engine_options
@handle_errors
def verify_command(graph: Optional[str], trials: int, max_n: int, prime: Optional[int], random_prime: bool,
                   seed: Optional[int], threads: Optional[int]):
    """Cross-check every query path against brute-force oracles.

    With GRAPH only that graph is checked; otherwise TRIALS seeded random
    digraphs with at most MAX_N vertices are. Exits 3 on the first mismatch
    and prints the offending edge list.
    """

    valid, error = validation.validate(trials, max_n, prime, random_prime, threads)
    if not valid:
        fail(error)

    ctx = {"client": build_client(prime, random_prime, seed, threads), "graph": graph,
           "trials": trials, "max_n": max_n}
    action = VerifyGraphAction() if graph else VerifyRandomAction()
    result = check(ui.load("Verifying", lambda: run_action(action, ctx)))

    data = result.data
    ui.success(f"✓ {data['checked_queries']} queries agree with the oracles")
    if data["rechecked_zeros"]:
        ui.warning(f"{len(data['rechecked_zeros'])} zero(s) were false zeros and rechecked under a second prime")
    emit_json(data)
