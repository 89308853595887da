"""UI helpers over the themed console.

All output here goes to stderr; command results are printed as JSON by the
commands themselves.
"""

from typing import Any, Callable, TypeVar

from walkforge.cli.utils import console, loading_status

T = TypeVar("T")


def load(message: str, fn: Callable[[], T]) -> T:
    """Execute a function with loading status.

    Example:
        result = ui.load("Preprocessing", lambda: run_action(PreprocessAction(), ctx))
    """
    with loading_status(message, ""):
        return fn()


def success(message: str) -> None:
    console.success(message)


def warning(message: str) -> None:
    console.warning(message)


def dim(message: str) -> None:
    console.dim(message)


def print(*args, **kwargs) -> None:
    console.print(*args, **kwargs)


def metrics(**values: Any) -> None:
    """One line of ``name=value`` pairs, values highlighted."""
    parts = [f"{console.get_styled(name, 'dim')}={console.get_styled(str(value), 'metric')}"
             for name, value in values.items()]
    console.print("  ".join(parts))
