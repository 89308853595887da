"""Distance command implementation."""

from typing import Optional

import click

from walkforge.cli import ui
from walkforge.cli.utils import build_client, check, emit_json, engine_options, fail, handle_errors, run_action
from . import validation
from .actions import DistanceAction


@click.command("distance")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("-u", "u", type=int, required=True, help="Start vertex")
@click.option("-v", "v", type=int, required=True, help="End vertex")
@click.option("--method", type=click.Choice(["binary", "scan"]), default="binary", show_default=True,
              help="Binary search on prefix counts or scan of all lengths")
@click.option("--fallback", is_flag=True, help="Resolve pairs beyond the horizon by repeated products")
@engine_options
@handle_errors
def distance_command(source: str, u: int, v: int, method: str, fallback: bool, prime: Optional[int],
                     random_prime: bool, seed: Optional[int], threads: Optional[int]):
    """Length of the shortest walk from U to V."""

    valid, error = validation.validate(u, v, prime, random_prime, threads)
    if not valid:
        fail(error)

    ctx = {
        "client": build_client(prime, random_prime, seed, threads, fallback),
        "source": source,
        "u": u,
        "v": v,
        "method": method,
        "fallback": fallback,
    }
    result = check(run_action(DistanceAction(), ctx))

    if result.data["status"] == "beyond_horizon":
        ui.warning("Reachable, but no walk within the horizon (try --fallback)")
    emit_json(result.data)
