"""Shared error types and handling for rydblock commands.

Library code raises the exceptions below; command runners are wrapped with
`handle_rydblock_errors` which turns them into a themed message, a machine-readable
`error.json` and the documented exit code.

Example usage:
    >>> from rydblock.utility_library.shared.error_handling import handle_rydblock_errors
    >>> @handle_rydblock_errors("pair")
    ... def run_pair(progress, task, console, config):
    ...     pass
"""

import functools
import json
from collections.abc import Callable
from pathlib import Path
from typing import Any

import typer
from rich.console import Console
from rich.progress import Progress

from .config import EXIT_FAILURE, EXIT_NUMERICAL, EXIT_VALIDATION
from .ui_theme import COLORS, create_status


class RydblockError(RuntimeError):
    """Base class for every error raised by rydblock."""

    exit_code = EXIT_FAILURE


class ValidationError(RydblockError, ValueError):
    """Inputs violate a documented precondition or schema."""

    exit_code = EXIT_VALIDATION


class NumericalError(RydblockError):
    """A numerical procedure could not produce a trustworthy value."""

    exit_code = EXIT_NUMERICAL


class DimensionMismatchError(ValidationError):
    pass


class NonHermitianError(ValidationError):
    pass


class CoincidentAtomsError(ValidationError):
    pass


class InstanceSchemaError(ValidationError):
    pass


class EdgeMismatchError(ValidationError):
    """Instance geometry does not induce the declared target edges."""

    def __init__(self, missing: list[tuple[int, int]], extra: list[tuple[int, int]]) -> None:
        self.missing = missing
        self.extra = extra
        parts = []
        if missing:
            parts.append("target edges not induced: " + ", ".join(f"{i}-{j}" for i, j in missing))
        if extra:
            parts.append("induced edges not in target: " + ", ".join(f"{i}-{j}" for i, j in extra))
        super().__init__("; ".join(parts))


class GraphTooLargeError(ValidationError):
    pass


class IntegrationError(NumericalError):
    pass


class BlockadePoleError(NumericalError):
    pass


class OutOfRegimeError(NumericalError):
    pass


class BracketError(NumericalError):
    pass


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the CLI exit code."""
    if isinstance(error, RydblockError):
        return error.exit_code
    if isinstance(error, ValueError):
        return EXIT_VALIDATION
    return EXIT_FAILURE


def write_error_report(output_dir: Path | None, utility_name: str | None, error: BaseException) -> Path | None:
    """Write `error.json` into output_dir, if there is one.

    Returns:
        Path of the report, or None when no directory was available
    """
    if output_dir is None:
        return None
    output_dir.mkdir(parents=True, exist_ok=True)
    report = {
        "utility": utility_name,
        "error_type": type(error).__name__,
        "message": str(error),
        "exit_code": exit_code_for(error),
    }
    path = output_dir / "error.json"
    path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def handle_rydblock_errors(
    utility_name: str | None = None,
) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """Decorator for consistent error handling across rydblock commands.

    The wrapped runner takes `(progress, task, console, config, ...)`; when the config has an
    `output_dir` attribute the error report lands there.

    Args:
        utility_name: Name of the command for error context

    Returns:
        Decorator function for error handling
    """
    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        @functools.wraps(func)
        def wrapper(progress: Progress, task: int, console: Console, *args: Any, **kwargs: Any) -> Any:
            try:
                return func(progress, task, console, *args, **kwargs)
            except (typer.Exit, typer.Abort):
                raise
            except Exception as e:
                progress.update(task, completed=True)
                console.print()
                config = args[0] if args else kwargs.get("config")
                output_dir = getattr(config, "output_dir", None)
                report = write_error_report(
                    Path(output_dir) if output_dir else None, utility_name, e
                )
                code = exit_code_for(e)
                context = f"{utility_name}: " if utility_name else ""
                if isinstance(e, ValueError):
                    console.print(create_status(f"{context}invalid input: {e}", "error"))
                elif isinstance(e, NumericalError):
                    console.print(create_status(f"{context}numerical failure: {e}", "error"))
                else:
                    console.print(create_status(f"Unexpected error {context}{e}", "error"))
                    console.print(f"[{COLORS['muted']}]Error type: {type(e).__name__}[/]")
                if report is not None:
                    console.print(f"[{COLORS['muted']}]Error report: {report}[/]")
                raise typer.Exit(code=code) from e

        return wrapper

    return decorator
