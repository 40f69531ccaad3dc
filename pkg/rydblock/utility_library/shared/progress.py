"""Progress indicators for rydblock commands.

Example usage:
    >>> from rydblock.utility_library.shared.progress import create_rydblock_progress
    >>> with create_rydblock_progress() as progress:
    ...     task = progress.add_task("Scanning...", total=30)
    ...     progress.update(task, advance=1)
"""

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)
from rich.spinner import SPINNERS

from .ui_theme import COLORS, RABI_SPINNER, SIMPLE_SPINNER

# Register the custom spinners once at module load
SPINNERS["rydblock"] = RABI_SPINNER
SPINNERS["rydblock_simple"] = SIMPLE_SPINNER


def create_rydblock_progress(console: Console | None = None, simple: bool = False) -> Progress:
    """Create a progress display with the rydblock spinner.

    Args:
        console: Optional console instance
        simple: Use the plain braille spinner

    Returns:
        Configured Progress instance
    """
    spinner_name = "rydblock_simple" if simple else "rydblock"
    return Progress(
        SpinnerColumn(spinner_name=spinner_name, style=COLORS['primary']),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(bar_width=24, complete_style=COLORS['accent']),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=console,
        transient=True,
        expand=False,
    )


def create_task_with_rydblock(progress: Progress, message: str, total: float | None = None) -> int:
    """Create a task with a themed message."""
    colored_message: str = f"[{COLORS['primary']}]{message}[/]"
    return progress.add_task(colored_message, total=total)
