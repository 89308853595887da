"""walkforge - walk counting and shortest cycles in digraphs via the Frobenius normal form."""

from loguru import logger

from .sdk import *  # noqa: F401,F403
from .sdk import __all__ as _sdk_all

logger.disable("walkforge")

__all__ = list(_sdk_all)
