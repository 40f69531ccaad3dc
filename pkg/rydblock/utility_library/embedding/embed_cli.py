#!/usr/bin/env python3
"""CLI interface for the embedding λ sweep using Typer."""

from pathlib import Path

import typer
from rich.console import Console

from ..shared.config import (
    DEFAULT_DT,
    EMBED_DURATION,
    STAR_OMEGA,
    STAR_SHUFFLE_PROBABILITY,
    STAR_SPECIAL_OMEGA,
)
from ..shared.experiment import EmbedConfig
from ..shared.options import c6_for_level, parse_float_list, parse_name_list
from ..shared.ui_theme import create_box_header, create_header, format_boolean_option
from .embed_runner import run_embed

console = Console()

PROTOCOL_NAMES = ("global", "local", "shuffled")


def embed(
    instance: str | None = typer.Option(
        None, "--instance", "-i",
        help="Instance file or bundled name (default: star_unit for global, star otherwise)",
    ),
    protocol: str = typer.Option("global,local,shuffled", "--protocol", "-p", help="Protocols, comma-separated"),
    ratios: str = typer.Option("0.8,2.0", "--ratios", "-r", help="λ/λ_c values, comma-separated"),
    duration: float = typer.Option(EMBED_DURATION, "--duration", "-T", help="Quench length in µs"),
    dt: float = typer.Option(DEFAULT_DT, "--dt", help="Sampling step in µs"),
    base_omega: float = typer.Option(STAR_OMEGA, "--base-omega", help="Base amplitude in rad/µs"),
    special_omega: float = typer.Option(STAR_SPECIAL_OMEGA, "--special-omega", help="Special amplitude in rad/µs"),
    probability: float = typer.Option(
        STAR_SHUFFLE_PROBABILITY, "--probability", help="Chance of the special amplitude per atom (shuffled)"
    ),
    seed: int | None = typer.Option(None, "--seed", "-s", help="Seed for the shuffled draws (required with shuffled)"),
    draws: int = typer.Option(10, "--draws", help="Shuffled draws to average"),
    derive_omegas: bool = typer.Option(
        False, "--derive-omegas", help="Take local amplitudes from the instance radii instead of the flags"
    ),
    level: int = typer.Option(70, "--level", help="Rydberg level selecting the C6 preset (70 or 82)"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output directory (default: derived from the config hash)"),
    workers: int | None = typer.Option(None, "--workers", "-j", help="Worker threads (default: available parallelism)"),
):
    """Quench scaled registers and report violation probabilities and correlations.

    Centers are scaled by ratio·λ_c, where λ_c is the scaling that breaks the first edge of the
    instance.

    Examples:
        # The three protocols on the bundled star at 0.8 and 2 λ_c
        rydblock embed --seed 7

        # Local drive only, on an instance file
        rydblock embed --instance star.json --protocol local --ratios 0.8,2.0
    """
    config = EmbedConfig(
        instance=instance,
        protocols=tuple(dict.fromkeys(parse_name_list(protocol, "protocol", PROTOCOL_NAMES))),
        lambda_ratios=parse_float_list(ratios, "ratios"),
        duration=duration,
        dt=dt,
        base_omega=base_omega,
        special_omega=special_omega,
        probability=probability,
        seed=seed,
        shuffle_draws=draws,
        derive_omegas=derive_omegas,
        c6=c6_for_level(level),
        workers=workers,
    ).with_output_dir(out)

    console.print()
    console.print(create_header("rydblock", "Embedding sweep"))
    console.print()

    console.print(create_box_header("Embed Configuration", {
        "Instance": config.instance or "bundled star / star_unit",
        "Protocols": ", ".join(config.protocols),
        "λ/λ_c": ", ".join(f"{r:g}" for r in config.lambda_ratios),
        "Quench": f"T = {config.duration:g} µs, dt = {config.dt:g} µs",
        "Amplitudes from radii": format_boolean_option(config.derive_omegas),
        "Output": config.output_dir,
    }))
    console.print()

    run_embed(config, console=console)


# For standalone usage
def main():
    """Entry point for standalone CLI usage."""
    typer.run(embed)
