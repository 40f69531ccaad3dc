"""Logging setup routed through rich.

Library modules call `get_logger(__name__)` and log at DEBUG; the CLI raises the level with
`--verbose`.
"""

import logging

from rich.console import Console
from rich.logging import RichHandler

ROOT_LOGGER = "rydblock"

_configured = False


def configure_logging(verbose: bool = False, console: Console | None = None) -> None:
    """Attach a RichHandler to the package logger.

    Args:
        verbose: Log at DEBUG instead of WARNING
        console: Console to log to (defaults to stderr)
    """
    global _configured
    logger = logging.getLogger(ROOT_LOGGER)
    if not _configured:
        handler = RichHandler(
            console=console or Console(stderr=True),
            show_path=False,
            rich_tracebacks=False,
            markup=False,
        )
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
        _configured = True
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    """Return a logger below the package root."""
    if not name.startswith(ROOT_LOGGER):
        name = f"{ROOT_LOGGER}.{name}"
    return logging.getLogger(name)
