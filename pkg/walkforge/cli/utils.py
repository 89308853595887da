"""CLI utilities and decorators."""

import json
import os
import sys
from contextlib import contextmanager
from dataclasses import replace
from functools import wraps
from typing import Any, NoReturn, Optional, Tuple

import click
from loguru import logger
from rich.status import Status

from walkforge.sdk import Config, VerificationMismatch, WalkForge, WalkForgeError
from .actions import ActionResult
from .themed_console import ThemedConsole

console = ThemedConsole()


def is_debug() -> bool:
    return os.environ.get("WALKFORGE_DEBUG", "").strip().lower() in ("1", "true", "yes")


def setup_logging(verbose: bool) -> None:
    """Route library logs to stderr when asked for."""
    if not (verbose or is_debug()):
        return
    logger.remove()
    logger.add(sys.stderr, level="DEBUG", format="<dim>{time:HH:mm:ss}</dim> {level: <7} {name}: {message}")
    logger.enable("walkforge")


@contextmanager
def loading_status(message: str, success_message: str = ""):
    """Spinner on stderr while the body runs."""
    status = Status(console.get_styled(message + "...", "info"), console=console)
    status.start()
    try:
        yield
        if success_message:
            console.success(f"✓ {success_message}")
    finally:
        status.stop()


def fail(message: str, exit_code: int = 1) -> NoReturn:
    console.error(message)
    sys.exit(exit_code)


def check(result: ActionResult) -> ActionResult:
    """Exit with the action's code when it failed."""
    if not result.ok:
        fail(result.error, result.exit_code or 1)
    return result


def run_action(action: Any, ctx: dict) -> ActionResult:
    """Execute an action, turning library errors into a failed result."""
    try:
        return action.execute(ctx)
    except VerificationMismatch as e:
        if e.instance:
            console.dim(e.instance.rstrip())
        return ActionResult(ok=False, data={"instance": e.instance}, error=str(e), exit_code=e.exit_code)
    except WalkForgeError as e:
        return ActionResult(ok=False, data={}, error=str(e), exit_code=e.exit_code)


def emit_json(payload: Any) -> None:
    """Machine-readable result on stdout."""
    click.echo(json.dumps(payload))


def build_client(
    prime: Optional[int] = None,
    random_prime: bool = False,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
    fallback: bool = False,
) -> WalkForge:
    """Client whose config is loaded from env/file and overridden by flags."""
    config = Config.load()
    overrides = {}
    if prime is not None:
        overrides["prime"] = prime
    if random_prime:
        overrides["random_prime"] = True
    if seed is not None:
        overrides["seed"] = seed
    if threads is not None:
        overrides["threads"] = threads
    if fallback:
        overrides["fallback"] = True
    return WalkForge(replace(config, **overrides))


def engine_options(func):
    """Shared `--prime`, `--random-prime`, `--seed` and `--threads` flags."""
    options = [
        click.option("--prime", type=int, default=None, help="Field modulus (default: configured prime)"),
        click.option("--random-prime", is_flag=True, help="Sample the modulus from the NTT-friendly primes"),
        click.option("--seed", type=int, default=None, help="Seed for every randomized step"),
        click.option("--threads", type=int, default=None, help="Worker threads (default: WALKFORGE_THREADS or CPU count)"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def validate_engine(prime: Optional[int], random_prime: bool, threads: Optional[int]) -> Tuple[bool, str]:
    if prime is not None and random_prime:
        return False, "Cannot specify both --prime and --random-prime"
    if threads is not None and threads < 1:
        return False, "--threads must be positive"
    return True, ""


def handle_errors(func):
    """Print library errors and exit with their code."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise
        except WalkForgeError as e:
            console.error(f"Error: {e}")
            sys.exit(e.exit_code)
        except OSError as e:
            console.error(f"Error: {e}")
            sys.exit(1)
        except Exception as e:
            console.error(f"Unexpected error: {e}")
            sys.exit(1)
    return wrapper
