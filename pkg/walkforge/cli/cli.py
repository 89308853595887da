"""Main CLI entry point for walkforge."""

from importlib.metadata import PackageNotFoundError, version

import click

from .ansc import ansc_command
from .apaw import apaw_command
from .bench import bench_command
from .config import config_command
from .cycle_sets import cycle_sets_command
from .diameter import diameter_command
from .distance import distance_command
from .exact import exact_command
from .preprocess import preprocess_command
from .query import query_command
from .utils import setup_logging
from .verify import verify_command


def get_version():
    """Get version from package metadata."""
    try:
        return version("walkforge")
    except PackageNotFoundError:
        return "unknown"


@click.group(invoke_without_command=True)
@click.version_option(version=get_version(), prog_name="walkforge")
@click.option("--verbose", is_flag=True, help="Log library diagnostics to stderr")
@click.pass_context
def cli(ctx, verbose: bool):
    """walkforge - walk counting and shortest cycles via the Frobenius normal form.

    Results are printed as JSON on stdout; progress and messages go to stderr.
    """
    setup_logging(verbose)
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


cli.add_command(preprocess_command)
cli.add_command(query_command)
cli.add_command(distance_command)
cli.add_command(ansc_command)
cli.add_command(apaw_command)
cli.add_command(cycle_sets_command)
cli.add_command(exact_command)
cli.add_command(diameter_command)
cli.add_command(verify_command)
cli.add_command(bench_command)
cli.add_command(config_command)


def main():
    """Main entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
