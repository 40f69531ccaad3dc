"""Disk realization search for a target graph.

This module provides the computation behind `rydblock realize`. For CLI usage, use realize_cli.py

Python API usage:
    from rydblock.utility_library.graphs.realize_runner import compute_realize
    from rydblock.utility_library.shared.experiment import RealizeConfig

    result = compute_realize(RealizeConfig(graph="k23", palette=(7.9, 35.55), seed=0))
    result.success
"""

from collections.abc import Callable

from rich.console import Console
from rich.progress import Progress
from rich.table import Table

from ..shared.artifacts import ArtifactWriter
from ..shared.error_handling import ValidationError, handle_rydblock_errors
from ..shared.experiment import RealizeConfig
from ..shared.log import get_logger
from ..shared.progress import create_rydblock_progress, create_task_with_rydblock
from ..shared.ui_theme import COLORS, create_status
from .disk_graph import AbstractGraph
from .instances import instance_to_dict, named_graph
from .realize import RealizeResult, realize_disk

logger = get_logger(__name__)


def target_for_config(config: RealizeConfig) -> AbstractGraph:
    """Explicit (n, edges) when given, else the named graph."""
    if config.edges is not None or config.n is not None:
        if config.n is None or config.edges is None:
            raise ValidationError("a custom target needs both --n and --edges")
        return AbstractGraph(config.n, frozenset(config.edges), config.name or "custom")
    target = named_graph(config.graph)
    if config.name:
        target = AbstractGraph(target.n, target.edges, config.name)
    return target


def check_realize_config(config: RealizeConfig) -> None:
    if not config.palette or any(not r > 0 for r in config.palette):
        raise ValidationError("radius palette must be non-empty and positive")
    if config.restarts < 1 or config.iterations < 0:
        raise ValidationError("need restarts ≥ 1 and iterations ≥ 0")


def compute_realize(config: RealizeConfig, on_done: Callable[[], None] | None = None) -> RealizeResult:
    """Run the annealing restarts for the configured target."""
    check_realize_config(config)
    target = target_for_config(config)
    result = realize_disk(
        target,
        config.palette,
        seed=config.seed,
        restarts=config.restarts,
        iterations=config.iterations,
        workers=config.workers,
    )
    if on_done is not None:
        on_done()
    if not result.success:
        logger.warning(
            "no margin-clean realization of %s: best restart %d has %d violations",
            target.name, result.restart, result.violations,
        )
    return result


def write_realize(writer: ArtifactWriter, result: RealizeResult) -> None:
    dg = result.disk_graph
    writer.write_json(f"{dg.name}.json", instance_to_dict(dg))
    missing, extra = dg.edge_mismatch(dg.target_edges or ())
    edge_slack, gap_slack = dg.min_margins()
    writer.write_json("realize_summary.json", {
        "name": dg.name,
        "success": result.success,
        "violations": result.violations,
        "penalty": result.penalty,
        "restart": result.restart,
        "missing_edges": [list(e) for e in missing],
        "extra_edges": [list(e) for e in extra],
        "min_edge_slack": edge_slack,
        "min_gap_slack": gap_slack,
    })


def _summary_table(result: RealizeResult) -> Table:
    dg = result.disk_graph
    table = Table(header_style=f"bold {COLORS['primary']}", border_style=COLORS["muted"], box=None)
    table.add_column("Vertex", justify="right", style=COLORS["secondary"])
    table.add_column("x (µm)", justify="right")
    table.add_column("y (µm)", justify="right")
    table.add_column("r_B (µm)", justify="right")
    for v, ((x, y), r) in enumerate(zip(dg.centers, dg.radii, strict=True)):
        table.add_row(str(v), f"{x:.4f}", f"{y:.4f}", f"{r:.4f}")
    return table


@handle_rydblock_errors("realize")
def execute_realize(progress: Progress, task: int, console: Console, config: RealizeConfig) -> RealizeResult:
    def advance() -> None:
        progress.advance(task)

    with ArtifactWriter(config) as writer:
        result = compute_realize(config, advance)
        write_realize(writer, result)
    return result


def run_realize(config: RealizeConfig, console: Console | None = None) -> RealizeResult:
    """Run `rydblock realize` with a progress display and a summary table.

    A failed search is not an error: the best restart is still written, and the status line
    says how many pairs it gets wrong.

    Args:
        config: Realize configuration with a resolved output directory
        console: Console for progress and summary output

    Returns:
        The best realization found
    """
    console = console or Console()
    with create_rydblock_progress(console=console) as progress:
        task = create_task_with_rydblock(progress, f"Annealing {config.restarts} restarts...", total=1)
        result = execute_realize(progress, task, console, config)

    console.print(_summary_table(result))
    console.print()
    if result.success:
        console.print(create_status(f"Realization written to {config.output_dir}", "success"))
    else:
        console.print(create_status(
            f"No margin-clean realization: best restart has {result.violations} wrong pairs "
            f"(written to {config.output_dir})",
            "warning",
        ))
    return result
