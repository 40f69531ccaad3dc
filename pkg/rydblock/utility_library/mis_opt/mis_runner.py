"""Local versus global final-drive comparison over a set of instances.

This module provides the computation behind `rydblock mis`. For CLI usage, use mis_cli.py

Python API usage:
    from rydblock.utility_library.mis_opt.mis_runner import compute_mis
    from rydblock.utility_library.shared.experiment import MisConfig

    result = compute_mis(MisConfig(instances=("k23",)))
    result.instances[0].deltas
"""

from collections.abc import Callable
from dataclasses import dataclass

from rich.console import Console
from rich.progress import Progress
from rich.table import Table

from ..graphs.disk_graph import DiskGraph
from ..graphs.instances import resolve_instance
from ..shared.artifacts import ArtifactWriter
from ..shared.error_handling import ValidationError, handle_rydblock_errors
from ..shared.experiment import MisConfig
from ..shared.log import get_logger
from ..shared.progress import create_rydblock_progress, create_task_with_rydblock
from ..shared.ui_theme import COLORS, create_status
from .ground_state import DriveMode
from .optimize import MISReport, check_search_bounds, enhancement, optimize_drive, violation_ratio

logger = get_logger(__name__)

REPORT_COLUMNS = (
    "instance", "mode", "kappa_opt", "delta_f_opt", "p_mis", "violation_weight",
    "mis_size", "ground_degeneracy", "gap", "flagged",
)
DELTA_COLUMNS = ("instance", "k", "delta_k", "p_mis_k_local", "p_mis_k_global")
RATIO_COLUMNS = ("instance", "violation_local", "violation_global", "violation_ratio")


@dataclass(frozen=True)
class InstanceComparison:
    instance: DiskGraph
    reports: dict[DriveMode, MISReport]

    @property
    def deltas(self) -> tuple[float | None, ...] | None:
        """Δ_k ladder, or None unless both modes ran."""
        if DriveMode.LOCAL not in self.reports or DriveMode.GLOBAL not in self.reports:
            return None
        return enhancement(self.reports[DriveMode.LOCAL], self.reports[DriveMode.GLOBAL])

    @property
    def violation_ratio(self) -> float | None:
        """Global over local violation weight, or None unless both modes ran."""
        if DriveMode.LOCAL not in self.reports or DriveMode.GLOBAL not in self.reports:
            return None
        return violation_ratio(self.reports[DriveMode.LOCAL], self.reports[DriveMode.GLOBAL])


@dataclass(frozen=True)
class MisResult:
    instances: list[InstanceComparison]


def check_mis_config(config: MisConfig) -> None:
    if not config.instances:
        raise ValidationError("no instances given")
    if not config.modes:
        raise ValidationError("no drive modes given")
    for mode in config.modes:
        if mode not in {m.value for m in DriveMode}:
            raise ValidationError(f"unknown drive mode {mode!r}")
    check_search_bounds(config.kappa_bounds, config.delta_f_bounds, config.grid_points, config.budget)


def compute_mis(config: MisConfig, on_done: Callable[[], None] | None = None) -> MisResult:
    """Optimize every requested mode on every instance."""
    check_mis_config(config)
    comparisons = []
    for ref in config.instances:
        instance = resolve_instance(ref)
        reports = {}
        for mode in config.modes:
            reports[DriveMode(mode)] = optimize_drive(
                instance,
                mode=mode,
                kappa_bounds=config.kappa_bounds,
                delta_f_bounds=config.delta_f_bounds,
                grid_points=config.grid_points,
                budget=config.budget,
                c6=config.c6,
                workers=config.workers,
                on_done=on_done,
            )
        comparisons.append(InstanceComparison(instance, reports))
    return MisResult(comparisons)


def write_mis(writer: ArtifactWriter, result: MisResult) -> None:
    report_rows = []
    delta_rows = []
    ratio_rows = []
    for comparison in result.instances:
        name = comparison.instance.name
        for mode, report in comparison.reports.items():
            report_rows.append((
                name, mode.value, report.params.kappa, report.params.delta_f, report.p_mis,
                report.violation_weight, report.mis_size, report.ground_degeneracy, report.gap,
                report.flagged,
            ))
        local = comparison.reports.get(DriveMode.LOCAL)
        global_ = comparison.reports.get(DriveMode.GLOBAL)
        deltas = comparison.deltas
        mis_size = next(iter(comparison.reports.values())).mis_size
        for k in range(mis_size + 1):
            delta_rows.append((
                name,
                k,
                deltas[k] if deltas is not None else None,
                local.p_mis_k[k] if local else None,
                global_.p_mis_k[k] if global_ else None,
            ))
        if local and global_:
            ratio_rows.append((name, local.violation_weight, global_.violation_weight, comparison.violation_ratio))
    writer.write_csv("mis_reports.csv", REPORT_COLUMNS, report_rows)
    writer.write_csv("mis_delta_k.csv", DELTA_COLUMNS, delta_rows)
    writer.write_csv("mis_violation_ratio.csv", RATIO_COLUMNS, ratio_rows)


def _summary_table(result: MisResult) -> Table:
    table = Table(header_style=f"bold {COLORS['primary']}", border_style=COLORS["muted"], box=None)
    table.add_column("Instance", style=COLORS["secondary"])
    table.add_column("Mode")
    table.add_column("κ", justify="right")
    table.add_column("δ_f", justify="right")
    table.add_column("P_MIS", justify="right")
    table.add_column("P_violation", justify="right")
    table.add_column("Δ_0", justify="right")
    table.add_column("global/local", justify="right")
    for comparison in result.instances:
        deltas = comparison.deltas
        delta_0 = "—" if deltas is None or deltas[0] is None else f"{deltas[0]:+.3f}"
        ratio = comparison.violation_ratio
        ratio_text = "—" if ratio is None else f"{ratio:.3g}"
        for mode, report in comparison.reports.items():
            table.add_row(
                comparison.instance.name or "",
                f"{mode.value}{' (flagged)' if report.flagged else ''}",
                f"{report.params.kappa:.4g}",
                f"{report.params.delta_f:.4g}",
                f"{report.p_mis:.4f}",
                f"{report.violation_weight:.3e}",
                delta_0,
                ratio_text,
            )
    return table


@handle_rydblock_errors("mis")
def execute_mis(progress: Progress, task: int, console: Console, config: MisConfig) -> MisResult:
    def advance() -> None:
        progress.advance(task)

    with ArtifactWriter(config) as writer:
        result = compute_mis(config, advance)
        write_mis(writer, result)
    return result


def run_mis(config: MisConfig, console: Console | None = None) -> MisResult:
    """Run `rydblock mis` with a progress display and a summary table.

    Args:
        config: MIS configuration with a resolved output directory
        console: Console for progress and summary output

    Returns:
        Reports per instance and mode
    """
    console = console or Console()
    evaluations = len(config.instances) * len(config.modes) * config.grid_points**2
    with create_rydblock_progress(console=console) as progress:
        task = create_task_with_rydblock(progress, "Scanning final Hamiltonians...", total=evaluations)
        result = execute_mis(progress, task, console, config)

    console.print(_summary_table(result))
    console.print()
    if any(r.flagged for c in result.instances for r in c.reports.values()):
        console.print(create_status("Some grids had no MIS weight; those reports are flagged", "warning"))
    console.print(create_status(f"MIS data written to {config.output_dir}", "success"))
    return result
