#!/usr/bin/env python3
"""CLI interface for the local/global MIS comparison using Typer."""

from pathlib import Path

import typer
from rich.console import Console

from ..shared.config import DELTA_F_BOUNDS, GRID_POINTS, KAPPA_BOUNDS, SIMPLEX_BUDGET
from ..shared.experiment import MisConfig
from ..shared.options import c6_for_level, parse_instance_list, parse_name_list
from ..shared.ui_theme import create_box_header, create_header
from .mis_runner import run_mis

console = Console()

MODE_NAMES = ("local", "global")


def mis(
    instance: str = typer.Option(
        "k23,k16", "--instance", "-i", help="Instance files or bundled names, comma-separated"
    ),
    modes: str = typer.Option("local,global", "--modes", "-m", help="Drive modes, comma-separated"),
    kappa_min: float = typer.Option(KAPPA_BOUNDS[0], "--kappa-min", help="Lower κ bound"),
    kappa_max: float = typer.Option(KAPPA_BOUNDS[1], "--kappa-max", help="Upper κ bound"),
    delta_min: float = typer.Option(DELTA_F_BOUNDS[0], "--delta-min", help="Lower δ_f bound in rad/µs"),
    delta_max: float = typer.Option(DELTA_F_BOUNDS[1], "--delta-max", help="Upper δ_f bound in rad/µs"),
    grid_points: int = typer.Option(GRID_POINTS, "--grid-points", help="Grid points per axis"),
    budget: int = typer.Option(SIMPLEX_BUDGET, "--budget", help="Simplex evaluations after the grid (0 skips)"),
    level: int = typer.Option(70, "--level", help="Rydberg level selecting the C6 preset (70 or 82)"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output directory (default: derived from the config hash)"),
    workers: int | None = typer.Option(None, "--workers", "-j", help="Worker threads (default: available parallelism)"),
):
    """Optimize (κ, δ_f) of the final Hamiltonian per drive mode and compare MIS probabilities.

    Writes `mis_reports.csv` (optimum per instance and mode) and `mis_delta_k.csv` (the
    enhancement Δ_k with the P_MIS−k values of both modes).

    Examples:
        # Every bundled instance, both modes
        rydblock mis

        # One instance file on a coarser grid
        rydblock mis --instance k16.json --modes local,global --grid-points 11
    """
    config = MisConfig(
        instances=parse_instance_list(instance),
        modes=tuple(dict.fromkeys(parse_name_list(modes, "mode", MODE_NAMES))),
        kappa_bounds=(kappa_min, kappa_max),
        delta_f_bounds=(delta_min, delta_max),
        grid_points=grid_points,
        budget=budget,
        c6=c6_for_level(level),
        workers=workers,
    ).with_output_dir(out)

    console.print()
    console.print(create_header("rydblock", "Final-drive MIS comparison"))
    console.print()

    console.print(create_box_header("MIS Configuration", {
        "Instances": ", ".join(config.instances),
        "Modes": ", ".join(config.modes),
        "κ": f"[{kappa_min:g}, {kappa_max:g}]",
        "δ_f": f"[{delta_min:g}, {delta_max:g}] rad/µs",
        "Search": f"{grid_points}×{grid_points} grid, then up to {budget} simplex evaluations",
        "Output": config.output_dir,
    }))
    console.print()

    run_mis(config, console=console)


# For standalone usage
def main():
    """Entry point for standalone CLI usage."""
    typer.run(mis)
