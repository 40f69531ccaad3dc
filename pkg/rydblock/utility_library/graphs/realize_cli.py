#!/usr/bin/env python3
"""CLI interface for the disk realization search using Typer."""

from pathlib import Path

import typer
from rich.console import Console

from ..shared.experiment import RealizeConfig
from ..shared.options import parse_edge_list, parse_float_list
from ..shared.ui_theme import create_box_header, create_header
from .instances import named_graph_names
from .realize_runner import run_realize

console = Console()


def realize(
    graph: str = typer.Option("k23", "--graph", "-g", help=f"Named target graph ({', '.join(named_graph_names())})"),
    n: int | None = typer.Option(None, "--n", help="Vertex count of a custom target (with --edges)"),
    edges: str | None = typer.Option(None, "--edges", "-e", help="Custom target edges, e.g. 0-1,1-2"),
    palette: str = typer.Option("7.9,35.55", "--palette", "-p", help="Allowed radii in µm, comma-separated"),
    seed: int = typer.Option(..., "--seed", "-s", help="Master seed (required)"),
    restarts: int = typer.Option(8, "--restarts", "-r", help="Independent annealing restarts"),
    iterations: int = typer.Option(20000, "--iterations", "-i", help="Annealing steps per restart"),
    name: str | None = typer.Option(None, "--name", help="Name stored in the instance file"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output directory (default: derived from the config hash)"),
    workers: int | None = typer.Option(None, "--workers", "-j", help="Worker threads (default: available parallelism)"),
):
    """Search for centers and palette radii whose disk graph is the target.

    Writes `<name>.json` in the instance format plus `realize_summary.json`. A search that
    misses the 5% margin still writes its best attempt and exits 0 with a warning.

    Examples:
        # K₂,₃ with two radii
        rydblock realize --graph k23 --palette 7.9,35.55 --seed 0

        # A custom path graph on one radius
        rydblock realize --n 3 --edges 0-1,1-2 --palette 8 --seed 1 --name p3
    """
    config = RealizeConfig(
        graph=graph.lower(),
        n=n,
        edges=parse_edge_list(edges) if edges is not None else None,
        palette=parse_float_list(palette, "palette"),
        seed=seed,
        restarts=restarts,
        iterations=iterations,
        name=name,
        workers=workers,
    ).with_output_dir(out)

    console.print()
    console.print(create_header("rydblock", "Disk realization search"))
    console.print()

    target = f"custom, {n} vertices" if n is not None or edges is not None else config.graph
    console.print(create_box_header("Realize Configuration", {
        "Target": target,
        "Palette": ", ".join(f"{r:g} µm" for r in config.palette),
        "Search": f"{config.restarts} restarts × {config.iterations} steps, seed {config.seed}",
        "Output": config.output_dir,
    }))
    console.print()

    run_realize(config, console=console)


# For standalone usage
def main():
    """Entry point for standalone CLI usage."""
    typer.run(realize)
