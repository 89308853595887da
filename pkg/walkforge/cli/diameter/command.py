"""Diameter command implementation."""

from typing import Optional

import click

from walkforge.cli import ui
from walkforge.cli.utils import build_client, check, emit_json, engine_options, fail, handle_errors, run_action
from . import validation
from .actions import AuditAction, DiameterAction


@click.command("diameter")
@click.argument("source", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--audit", type=int, default=None, help="Audit COUNT random strongly connected graphs instead")
@click.option("--n", "n", type=int, default=32, show_default=True, help="Vertices per audited graph")
@click.option("--density", type=float, default=0.05, show_default=True, help="Arc density of audited graphs")
@engine_options
@handle_errors
def diameter_command(source: Optional[str], audit: Optional[int], n: int, density: float,
                     prime: Optional[int], random_prime: bool, seed: Optional[int], threads: Optional[int]):
    """Compare the diameter with the invariant factor degrees."""

    valid, error = validation.validate(source, audit, n, density, prime, random_prime, threads)
    if not valid:
        fail(error)

    ctx = {"client": build_client(prime, random_prime, seed, threads), "source": source,
           "count": audit, "n": n, "density": density}
    if audit is None:
        result = check(run_action(DiameterAction(), ctx))
        if not result.data["within_mu_min"]:
            ui.warning(f"Diameter {result.data['diameter']} exceeds mu_min={result.data['mu_min']}")
    else:
        result = check(ui.load("Auditing", lambda: run_action(AuditAction(), ctx)))
        data = result.data
        ui.metrics(graphs=data["total"], over_mu_min=data["mu_min_violations"],
                   over_minpoly=data["minpoly_violations"])
    emit_json(result.data)
