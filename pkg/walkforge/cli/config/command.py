"""Config command group implementation."""

import click

from walkforge.cli import ui
from walkforge.cli.settings import config
from walkforge.cli.utils import check, fail, handle_errors
from . import validation
from .actions import GetConfigAction, SetConfigAction, ShowConfigAction, UnsetConfigAction


@click.group(name="config")
def config_command():
    """Manage walkforge configuration (config.ini)."""
    pass


@config_command.command(name="get")
@click.argument("key")
@handle_errors
def config_get_command(key: str):
    """Get a configuration value, e.g. engine.prime."""
    valid, error = validation.validate_key(key)
    if not valid:
        fail(error)

    result = check(GetConfigAction().execute({"key": key}))
    click.echo(result.data["value"])


@config_command.command(name="set")
@click.argument("key")
@click.argument("value")
@handle_errors
def config_set_command(key: str, value: str):
    """Set a configuration value."""
    valid, error = validation.validate_set(key, value)
    if not valid:
        fail(error)

    check(SetConfigAction().execute({"key": key, "value": value}))
    ui.success(f"✓ {key} = {value}")


@config_command.command(name="unset")
@click.argument("key")
@handle_errors
def config_unset_command(key: str):
    """Remove a configuration value."""
    valid, error = validation.validate_key(key)
    if not valid:
        fail(error)

    check(UnsetConfigAction().execute({"key": key}))
    ui.success(f"✓ Removed {key}")


@config_command.command(name="show")
@handle_errors
def config_show_command():
    """Show the entire configuration."""
    result = ShowConfigAction().execute({})
    ui.dim(f"# {result.data['config_path']}")
    if result.data["content"]:
        click.echo(result.data["content"].rstrip())


@config_command.command(name="path")
@handle_errors
def config_path_command():
    """Print the configuration file path."""
    click.echo(str(config.get_config_path()))
