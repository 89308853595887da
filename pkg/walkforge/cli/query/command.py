"""Query command implementation."""

from typing import Optional

import click

from walkforge.cli import ui
from walkforge.cli.utils import build_client, check, emit_json, engine_options, fail, handle_errors, run_action
from . import validation
from .actions import AllLengthsAction, PrefixCountAction, WalkCountAction


@click.command("query")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("-u", "u", type=int, required=True, help="Start vertex")
@click.option("-v", "v", type=int, required=True, help="End vertex")
@click.option("--k", "k", type=int, default=None, help="Count walks of exactly K steps")
@click.option("--all", "all_lengths", is_flag=True, help="Count walks of every length up to the horizon")
@click.option("--upto", type=int, default=None, help="Count walks of at most K steps")
@click.option("--fallback", is_flag=True, help="Answer lengths beyond the horizon by repeated products")
@engine_options
@handle_errors
def query_command(source: str, u: int, v: int, k: Optional[int], all_lengths: bool, upto: Optional[int],
                  fallback: bool, prime: Optional[int], random_prime: bool, seed: Optional[int],
                  threads: Optional[int]):
    """Count walks from U to V in SOURCE (an index file or an edge list)."""

    # Validate
    valid, error = validation.validate(u, v, k, all_lengths, upto, prime, random_prime, threads)
    if not valid:
        fail(error)

    # Execute
    ctx = {
        "client": build_client(prime, random_prime, seed, threads, fallback),
        "source": source,
        "u": u,
        "v": v,
        "k": k if k is not None else upto,
        "fallback": fallback,
    }
    if all_lengths:
        action = AllLengthsAction()
    elif upto is not None:
        action = PrefixCountAction()
    else:
        action = WalkCountAction()

    result = check(run_action(action, ctx))
    if result.data.get("via_fallback"):
        ui.dim("Answered beyond the horizon by repeated products")
    emit_json(result.data)
