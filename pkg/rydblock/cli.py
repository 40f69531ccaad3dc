"""Root Typer application that dispatches to vertical slices.

Includes 'pair', 'fit', 'embed', 'mis' and 'realize' commands.
"""

import typer
from rich.console import Console
from rich.table import Table

from .utility_library.blockade_models.fit_cli import fit
from .utility_library.blockade_models.pair_cli import pair
from .utility_library.embedding.embed_cli import embed
from .utility_library.graphs.realize_cli import realize
from .utility_library.mis_opt.mis_cli import mis
from .utility_library.shared.log import configure_logging
from .utility_library.shared.ui_theme import ARROW, ATOM, COLORS

console = Console()

app = typer.Typer(
    help=f"[{COLORS['primary']}]rydblock[/] [{COLORS['accent']}]{ATOM}[/] Local blockade simulation and MIS encoding",
    add_completion=False,
    no_args_is_help=False,
    pretty_exceptions_show_locals=False,
    rich_markup_mode="rich",
)
app.command(name="pair", help="Two-atom P_RR scans and blockade radii per drive scenario")(pair)
app.command(name="fit", help="Fit the local-drive gradient and check the P_RR model residuals")(fit)
app.command(name="embed", help="λ-scaling sweeps of violation probability and correlations")(embed)
app.command(name="mis", help="Local versus global final-drive MIS probabilities")(mis)
app.command(name="realize", help="Search for a disk realization of a target graph")(realize)


@app.callback(invoke_without_command=True)
def _main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress details to stderr"),
) -> None:
    """Show welcome message when no command is provided."""
    configure_logging(verbose)
    if ctx.invoked_subcommand is None:
        console.print(f"\n[{COLORS['primary']}]{ARROW}[/] [bold]rydblock[/bold] [{COLORS['accent']}]{ATOM}[/]")
        console.print("[dim]Rydberg blockade under local drives, from atom pairs to MIS encodings[/dim]\n")

        table = Table(
            show_header=True,
            header_style=f"bold {COLORS['primary']}",
            border_style=COLORS['muted'],
            title_style=f"bold {COLORS['accent']}",
            box=None,
        )

        table.add_column("Command", style=COLORS['secondary'], width=12)
        table.add_column("Description", style=COLORS['primary'])
        table.add_column("Example", style="dim")

        table.add_row("pair", "Two-atom P_RR and blockade radii", "rydblock pair --scenario global --omega 3")
        table.add_row("fit", "Local gradient fit and residuals", "rydblock fit --combinations 21")
        table.add_row("embed", "Violation sweeps over λ", "rydblock embed --seed 7")
        table.add_row("mis", "Local vs global MIS probability", "rydblock mis --instance k23")
        table.add_row("realize", "Disk realization search", "rydblock realize --graph k23 --seed 0")

        console.print(table)
        help_text = f"\n[{COLORS['muted']}]Use[/] [{COLORS['primary']}]rydblock <command> --help[/]"
        console.print(f"{help_text} [{COLORS['muted']}]for detailed options[/]")
        console.print("[dim]Example: rydblock embed --help[/dim]\n")
