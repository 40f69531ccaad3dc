"""λ-scaling embedding sweeps for the three drive protocols.

This module provides the computation behind `rydblock embed`. For CLI usage, use embed_cli.py

Python API usage:
    from rydblock.utility_library.embedding.embed_runner import compute_embed
    from rydblock.utility_library.shared.experiment import EmbedConfig

    result = compute_embed(EmbedConfig(protocols=("global", "local"), lambda_ratios=(0.8, 2.0)))
    [r.violation for r in result.reports]
"""

from collections.abc import Callable
from dataclasses import dataclass

from rich.console import Console
from rich.progress import Progress
from rich.table import Table

from ..graphs.disk_graph import DiskGraph, lambda_breaks
from ..graphs.instances import load_bundled_instance, resolve_instance
from ..shared.artifacts import ArtifactWriter
from ..shared.error_handling import ValidationError, handle_rydblock_errors
from ..shared.experiment import EmbedConfig
from ..shared.log import get_logger
from ..shared.progress import create_rydblock_progress, create_task_with_rydblock
from ..shared.ui_theme import COLORS, create_status
from .sweep import (
    EmbeddingProtocol,
    EmbeddingReport,
    ProtocolKind,
    ShuffledSummary,
    lambda_sweep,
    local_protocol_for_instance,
    shuffled_mean_violation,
)

logger = get_logger(__name__)

VIOLATION_COLUMNS = ("protocol", "instance", "lambda_ratio", "lambda_scale", "violation", "max_edge_correlation")
SHUFFLED_COLUMNS = ("lambda_ratio", "draw", "seed", "violation", "special_atoms")

# Instances used when --instance is not given
DEFAULT_INSTANCES = {
    ProtocolKind.GLOBAL: "star_unit",
    ProtocolKind.LOCAL: "star",
    ProtocolKind.SHUFFLED: "star",
}


@dataclass(frozen=True)
class ProtocolSweep:
    instance: DiskGraph
    protocol: EmbeddingProtocol
    reports: list[EmbeddingReport]


@dataclass(frozen=True)
class EmbedResult:
    sweeps: list[ProtocolSweep]
    shuffled: list[ShuffledSummary]


def check_embed_config(config: EmbedConfig) -> None:
    for name in config.protocols:
        if name not in {kind.value for kind in ProtocolKind}:
            raise ValidationError(f"unknown protocol {name!r}")
    if not config.lambda_ratios or any(not r > 0 for r in config.lambda_ratios):
        raise ValidationError("λ ratios must be positive")
    if not (config.duration > 0 and config.dt > 0):
        raise ValidationError("duration and dt must be positive")
    if not (config.base_omega > 0 and config.special_omega > 0):
        raise ValidationError("drive amplitudes must be positive")
    if not 0 <= config.probability <= 1:
        raise ValidationError(f"shuffle probability must lie in [0, 1], got {config.probability}")
    if ProtocolKind.SHUFFLED.value in config.protocols:
        if config.seed is None:
            raise ValidationError("the shuffled protocol needs --seed")
        if config.shuffle_draws < 1:
            raise ValidationError("need at least one shuffled draw")


def instance_for(config: EmbedConfig, kind: ProtocolKind) -> DiskGraph:
    if config.instance is not None:
        return resolve_instance(config.instance)
    return load_bundled_instance(DEFAULT_INSTANCES[kind])


def protocol_for(config: EmbedConfig, kind: ProtocolKind, instance: DiskGraph) -> EmbeddingProtocol:
    """Protocol of the given kind; local special vertices are the atoms above the smallest radius."""
    if kind is ProtocolKind.GLOBAL:
        return EmbeddingProtocol.global_drive(config.base_omega)
    if kind is ProtocolKind.LOCAL:
        if config.derive_omegas:
            return local_protocol_for_instance(instance, config.c6)
        special = [v for v, r in enumerate(instance.radii) if r > instance.radii.min()]
        return EmbeddingProtocol.local(config.base_omega, config.special_omega, special)
    assert config.seed is not None
    return EmbeddingProtocol.shuffled(config.base_omega, config.special_omega, config.probability, config.seed)


def compute_embed(config: EmbedConfig, on_done: Callable[[], None] | None = None) -> EmbedResult:
    """Sweep every protocol over the λ ratios; the shuffled one also gets its draw average."""
    check_embed_config(config)
    sweeps = []
    shuffled: list[ShuffledSummary] = []
    for name in config.protocols:
        kind = ProtocolKind(name)
        instance = instance_for(config, kind)
        protocol = protocol_for(config, kind, instance)
        reports = lambda_sweep(
            instance, protocol, config.lambda_ratios, config.duration, config.dt, config.c6, config.workers, on_done
        )
        sweeps.append(ProtocolSweep(instance, protocol, reports))
        if kind is ProtocolKind.SHUFFLED:
            assert config.seed is not None
            shuffled = shuffled_mean_violation(
                instance,
                config.base_omega,
                config.special_omega,
                config.probability,
                config.seed,
                config.shuffle_draws,
                config.lambda_ratios,
                config.duration,
                config.dt,
                config.c6,
                config.workers,
                on_done,
            )
    return EmbedResult(sweeps, shuffled)


def write_embed(writer: ArtifactWriter, result: EmbedResult) -> None:
    rows = []
    for sweep in result.sweeps:
        for report in sweep.reports:
            rows.append((
                report.protocol, sweep.instance.name, report.lambda_ratio, report.scale,
                report.violation, report.max_edge_correlation,
            ))
            n = report.correlation.shape[0]
            writer.write_csv(
                f"embed_corr_{report.protocol}_{report.lambda_ratio:g}.csv",
                ("atom", *(str(j) for j in range(n))),
                [(i, *(float(c) for c in report.correlation[i])) for i in range(n)],
            )
    shuffled_instance = next(
        (s.instance.name for s in result.sweeps if s.protocol.kind is ProtocolKind.SHUFFLED), None
    )
    draw_rows = []
    for summary in result.shuffled:
        rows.append(("shuffled_mean", shuffled_instance, summary.lambda_ratio, None, summary.mean_violation, None))
        draws = zip(summary.seeds, summary.violations, summary.special_atoms, strict=True)
        for k, (seed, violation, atoms) in enumerate(draws):
            draw_rows.append((summary.lambda_ratio, k, seed, violation, " ".join(map(str, atoms))))
    writer.write_csv("embed_violation.csv", VIOLATION_COLUMNS, rows)
    if result.shuffled:
        writer.write_csv("embed_shuffled.csv", SHUFFLED_COLUMNS, draw_rows)

    instances = {}
    for sweep in result.sweeps:
        lam_c, lam_full = lambda_breaks(sweep.instance)
        instances[sweep.instance.name] = {
            "lambda_c": lam_c,
            "lambda_full": lam_full,
            "target_edges": [list(e) for e in sorted(sweep.instance.target_graph().edges)],
        }
    writer.write_json("embed_instances.json", instances)


def _summary_table(result: EmbedResult) -> Table:
    table = Table(header_style=f"bold {COLORS['primary']}", border_style=COLORS["muted"], box=None)
    table.add_column("Protocol", style=COLORS["secondary"])
    table.add_column("Instance")
    table.add_column("λ/λ_c", justify="right")
    table.add_column("P_violation", justify="right")
    table.add_column("max edge C_ij", justify="right")
    for sweep in result.sweeps:
        for report in sweep.reports:
            table.add_row(
                report.protocol, sweep.instance.name or "", f"{report.lambda_ratio:g}",
                f"{report.violation:.4f}", f"{report.max_edge_correlation:.4f}",
            )
    for summary in result.shuffled:
        table.add_row(
            f"shuffled (mean of {len(summary.seeds)})", "", f"{summary.lambda_ratio:g}",
            f"{summary.mean_violation:.4f}", "—",
        )
    return table


@handle_rydblock_errors("embed")
def execute_embed(progress: Progress, task: int, console: Console, config: EmbedConfig) -> EmbedResult:
    def advance() -> None:
        progress.advance(task)

    with ArtifactWriter(config) as writer:
        result = compute_embed(config, advance)
        write_embed(writer, result)
    return result


def run_embed(config: EmbedConfig, console: Console | None = None) -> EmbedResult:
    """Run `rydblock embed` with a progress display and a summary table.

    Args:
        config: Embed configuration with a resolved output directory
        console: Console for progress and summary output

    Returns:
        Reports for every protocol and ratio, plus the shuffled averages
    """
    console = console or Console()
    quenches = len(config.protocols) * len(config.lambda_ratios)
    if ProtocolKind.SHUFFLED.value in config.protocols:
        quenches += config.shuffle_draws * len(config.lambda_ratios)
    with create_rydblock_progress(console=console) as progress:
        task = create_task_with_rydblock(progress, "Quenching scaled registers...", total=quenches)
        result = execute_embed(progress, task, console, config)

    console.print(_summary_table(result))
    console.print()
    console.print(create_status(f"Embedding data written to {config.output_dir}", "success"))
    return result
