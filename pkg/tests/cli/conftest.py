import json

import pytest
from click.testing import CliRunner

from walkforge.cli.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def invoke(runner):
    """Run the CLI and hand back ``(result, parsed stdout or None)``."""
    def run(*args):
        result = runner.invoke(cli, [str(a) for a in args])
        payload = None
        if result.exit_code == 0 and result.stdout.strip():
            payload = json.loads(result.stdout.strip().splitlines()[-1])
        return result, payload
    return run
