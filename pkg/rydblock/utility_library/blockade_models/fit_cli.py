#!/usr/bin/env python3
"""CLI interface for the local-gradient fitting sweep using Typer."""

from pathlib import Path

import typer
from rich.console import Console

from ..shared.config import DEFAULT_DT, FIT_COMBINATIONS, FIT_DURATION, FIT_R_GRID
from ..shared.experiment import FitConfig
from ..shared.options import c6_for_level
from ..shared.ui_theme import create_box_header, create_header
from .fit_runner import run_fit

console = Console()


def fit(
    combinations: int = typer.Option(
        FIT_COMBINATIONS, "--combinations", "-n", help="Number of (Ω₀, Ω₁) combinations in the sweep"
    ),
    duration: float = typer.Option(FIT_DURATION, "--duration", "-T", help="Quench length in µs"),
    dt: float = typer.Option(DEFAULT_DT, "--dt", help="Sampling step in µs"),
    r_min: float = typer.Option(FIT_R_GRID[0], "--r-min", help="Smallest separation in µm"),
    r_max: float = typer.Option(FIT_R_GRID[1], "--r-max", help="Largest separation in µm"),
    r_points: int = typer.Option(FIT_R_GRID[2], "--r-points", help="Number of separations per sample"),
    tol_r: float = typer.Option(1e-3, "--tol-r", help="Bisection tolerance for r_B in µm"),
    level: int = typer.Option(70, "--level", help="Rydberg level selecting the C6 preset (70 or 82)"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output directory (default: derived from the config hash)"),
    workers: int | None = typer.Option(None, "--workers", "-j", help="Worker threads (default: available parallelism)"),
):
    """Fit the local-drive gradient over a sweep of amplitude pairs.

    Each combination is simulated on the r grid, mapped onto the sequential curve at Ω_eff
    and fitted for its gradient; the gradients are then fitted against 1/r_B^π(Ω_eff).

    Examples:
        # Full 61-combination sweep
        rydblock fit

        # Quick look with fewer combinations
        rydblock fit --combinations 20 --r-points 40
    """
    config = FitConfig(
        combinations=combinations,
        duration=duration,
        dt=dt,
        r_min=r_min,
        r_max=r_max,
        r_points=r_points,
        tol_r=tol_r,
        c6=c6_for_level(level),
        workers=workers,
    ).with_output_dir(out)

    console.print()
    console.print(create_header("rydblock", "Local gradient fit"))
    console.print()

    console.print(create_box_header("Fit Configuration", {
        "Combinations": config.combinations,
        "Quench": f"T = {config.duration:g} µs, dt = {config.dt:g} µs",
        "r grid": f"{config.r_points} points in [{config.r_min:g}, {config.r_max:g}] µm",
        "Output": config.output_dir,
    }))
    console.print()

    run_fit(config, console=console)


# For standalone usage
def main():
    """Entry point for standalone CLI usage."""
    typer.run(fit)
