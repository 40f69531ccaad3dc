#!/usr/bin/env python3
"""CLI interface for two-atom blockade scans using Typer."""

from pathlib import Path

import typer
from rich.console import Console

from ..shared.config import DEFAULT_DT, PAIR_DURATION
from ..shared.experiment import PairConfig
from ..shared.options import c6_for_level, parse_float_list, parse_name_list
from ..shared.ui_theme import create_box_header, create_header, format_boolean_option
from .pair_runner import run_pair

console = Console()

SCENARIO_NAMES = ("sequential", "global", "local")


def pair(
    scenario: str = typer.Option(
        ",".join(SCENARIO_NAMES),
        "--scenario",
        "-s",
        help="Comma-separated drive scenarios: sequential, global, local",
    ),
    omega: str = typer.Option("1,3", "--omega", "-w", help="Comma-separated amplitudes in rad/µs (mean amplitude for local)"),
    ratio: float = typer.Option(3.0, "--ratio", help="Ω₁/Ω₀ for the local scenario"),
    delta: float = typer.Option(0.0, "--delta", help="Detuning in rad/µs (sequential and global only)"),
    duration: float = typer.Option(PAIR_DURATION, "--duration", "-T", help="Quench length in µs"),
    dt: float = typer.Option(DEFAULT_DT, "--dt", help="Sampling step in µs"),
    r_min: float = typer.Option(4.0, "--r-min", help="Smallest separation in µm"),
    r_max: float = typer.Option(16.0, "--r-max", help="Largest separation in µm"),
    r_points: int = typer.Option(30, "--r-points", help="Number of separations in the scan"),
    tol_r: float = typer.Option(1e-3, "--tol-r", help="Bisection tolerance for r_B in µm"),
    no_radius: bool = typer.Option(False, "--no-radius", help="Skip r_B extraction"),
    level: int = typer.Option(70, "--level", help="Rydberg level selecting the C6 preset (70 or 82)"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output directory (default: derived from the config hash)"),
    workers: int | None = typer.Option(None, "--workers", "-j", help="Worker threads (default: available parallelism)"),
):
    """Scan P_RR(r) for atom pairs and extract blockade radii.

    Simulates each scenario over a grid of separations, compares with the closed-form
    models and bisects for the separation where P_RR crosses 0.5.

    Examples:
        # Global drive at Ω = 3 rad/µs
        rydblock pair --scenario global --omega 3 --duration 50

        # Local drive with mean amplitudes 1 and 3, Ω₁/Ω₀ = 3
        rydblock pair --scenario local --omega 1,3 --ratio 3
    """
    config = PairConfig(
        scenarios=parse_name_list(scenario, "scenario", SCENARIO_NAMES),
        omegas=parse_float_list(omega, "omega"),
        ratio=ratio,
        delta=delta,
        duration=duration,
        dt=dt,
        r_min=r_min,
        r_max=r_max,
        r_points=r_points,
        tol_r=tol_r,
        extract_radius=not no_radius,
        c6=c6_for_level(level),
        workers=workers,
    ).with_output_dir(out)

    console.print()
    console.print(create_header("rydblock", "Pair blockade scan"))
    console.print()

    console.print(create_box_header("Pair Configuration", {
        "Scenarios": ", ".join(config.scenarios),
        "Ω (rad/µs)": ", ".join(f"{w:g}" for w in config.omegas),
        "Ω₁/Ω₀ (local)": f"{config.ratio:g}",
        "δ (rad/µs)": f"{config.delta:g}",
        "Quench": f"T = {config.duration:g} µs, dt = {config.dt:g} µs",
        "r grid": f"{config.r_points} points in [{config.r_min:g}, {config.r_max:g}] µm",
        "r_B extraction": format_boolean_option(config.extract_radius),
        "Output": config.output_dir,
    }))
    console.print()

    run_pair(config, console=console)


# For standalone usage
def main():
    """Entry point for standalone CLI usage."""
    typer.run(pair)
