"""Pair blockade scans: simulated P_RR(r) against the closed-form models, plus r_B extraction.

This module provides the computation behind `rydblock pair`. For CLI usage, use pair_cli.py

Python API usage:
    from rydblock.utility_library.blockade_models.pair_runner import compute_pair
    from rydblock.utility_library.shared.experiment import PairConfig

    result = compute_pair(PairConfig(scenarios=("global",), omegas=(3.0,)))
    result.radii[0].rb_sim
"""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from rich.console import Console
from rich.progress import Progress
from rich.table import Table

from ..shared.artifacts import ArtifactWriter
from ..shared.error_handling import ValidationError, handle_rydblock_errors
from ..shared.experiment import PairConfig
from ..shared.log import get_logger
from ..shared.parallel import parallel_map
from ..shared.progress import create_rydblock_progress, create_task_with_rydblock
from ..shared.ui_theme import COLORS, create_status
from .simulation import DriveKind, DriveScenario, rb_from_simulation, scan_prr

logger = get_logger(__name__)

PRR_COLUMNS = ("scenario", "omega0", "omega1", "delta", "r_um", "prr_sim", "prr_model")
RB_COLUMNS = ("scenario", "omega0", "omega1", "rb_sim_um", "rb_model_um")


@dataclass(frozen=True)
class PairScan:
    scenario: DriveScenario
    r_values: np.ndarray
    prr_sim: np.ndarray
    prr_model: list[float | None]


@dataclass(frozen=True)
class PairRadius:
    scenario: DriveScenario
    rb_sim: float
    rb_model: float | None

    @property
    def relative_error(self) -> float | None:
        if self.rb_model is None:
            return None
        return abs(self.rb_sim - self.rb_model) / self.rb_model


@dataclass(frozen=True)
class PairResult:
    scans: list[PairScan]
    radii: list[PairRadius]


def check_pair_config(config: PairConfig) -> None:
    """Raise ValidationError for a config that cannot run."""
    for name in config.scenarios:
        if name not in {kind.value for kind in DriveKind}:
            raise ValidationError(f"unknown scenario {name!r}")
    if not config.omegas or any(not w > 0 for w in config.omegas):
        raise ValidationError("drive amplitudes must be positive")
    if not config.ratio > 0:
        raise ValidationError(f"amplitude ratio must be positive, got {config.ratio}")
    if "local" in config.scenarios and config.delta != 0:
        raise ValidationError("the local scenario is modelled at zero detuning only; drop it or use --delta 0")
    if not 0 < config.r_min < config.r_max:
        raise ValidationError(f"need 0 < r_min < r_max, got [{config.r_min}, {config.r_max}]")
    if config.r_points < 2:
        raise ValidationError("r grid needs at least 2 points")
    if not (config.duration > 0 and config.dt > 0 and config.tol_r > 0):
        raise ValidationError("duration, dt and tol_r must be positive")


def pair_scenarios(config: PairConfig) -> list[DriveScenario]:
    """One scenario per (kind, amplitude); local cases use Ω as the mean amplitude."""
    scenarios = []
    for name in config.scenarios:
        kind = DriveKind(name)
        for omega in config.omegas:
            if kind is DriveKind.SEQUENTIAL:
                scenarios.append(DriveScenario.sequential(omega, config.delta))
            elif kind is DriveKind.GLOBAL:
                scenarios.append(DriveScenario.global_drive(omega, config.delta))
            else:
                scenarios.append(DriveScenario.local_from_average(omega, config.ratio))
    return scenarios


def _model_curve(scenario: DriveScenario, r_values: np.ndarray, c6: float) -> list[float | None]:
    values: list[float | None] = []
    for r in r_values:
        try:
            values.append(scenario.model_prr(float(r), c6))
        except ValidationError:
            # below the mapped-curve domain
            values.append(None)
    return values


def _model_radius(scenario: DriveScenario, c6: float) -> float | None:
    # Global and local radius models are zero-detuning results
    if scenario.kind is not DriveKind.SEQUENTIAL and scenario.delta != 0:
        return None
    return scenario.model_radius(c6)


def scan_pair_scenarios(config: PairConfig, on_done: Callable[[], None] | None = None) -> list[PairScan]:
    """Simulated and model P_RR for every scenario over the r grid."""
    check_pair_config(config)
    r_values = np.linspace(config.r_min, config.r_max, config.r_points)
    scans = []
    for scenario in pair_scenarios(config):
        logger.debug("scanning %s over %d separations", scenario.label(), r_values.size)
        prr = scan_prr(scenario, r_values, config.duration, config.dt, config.c6, config.workers, on_done)
        scans.append(PairScan(scenario, r_values, prr, _model_curve(scenario, r_values, config.c6)))
    return scans


def extract_pair_radii(
    config: PairConfig, scenarios: list[DriveScenario], on_done: Callable[[], None] | None = None
) -> list[PairRadius]:
    """r_B by bisection for each scenario, next to its model value."""

    def extract(scenario: DriveScenario) -> PairRadius:
        rb = rb_from_simulation(scenario, config.duration, config.tol_r, config.dt, config.c6)
        return PairRadius(scenario, rb, _model_radius(scenario, config.c6))

    return parallel_map(extract, scenarios, config.workers, on_done)


def compute_pair(config: PairConfig, on_done: Callable[[], None] | None = None) -> PairResult:
    """Scan every scenario and, if asked, extract r_B."""
    scans = scan_pair_scenarios(config, on_done)
    radii = extract_pair_radii(config, [s.scenario for s in scans], on_done) if config.extract_radius else []
    return PairResult(scans, radii)


def write_pair_scans(writer: ArtifactWriter, scans: list[PairScan]) -> None:
    rows = []
    for scan in scans:
        s = scan.scenario
        for r, sim, model in zip(scan.r_values, scan.prr_sim, scan.prr_model, strict=True):
            rows.append((s.kind.value, s.omega0, s.omega1, s.delta, float(r), float(sim), model))
    writer.write_csv("pair_prr.csv", PRR_COLUMNS, rows)


def write_pair_radii(writer: ArtifactWriter, radii: list[PairRadius]) -> None:
    writer.write_csv(
        "pair_rb.csv",
        RB_COLUMNS,
        [(p.scenario.kind.value, p.scenario.omega0, p.scenario.omega1, p.rb_sim, p.rb_model) for p in radii],
    )


def _summary_table(result: PairResult) -> Table:
    table = Table(header_style=f"bold {COLORS['primary']}", border_style=COLORS["muted"], box=None)
    table.add_column("Scenario", style=COLORS["secondary"])
    table.add_column("max |sim − model|", justify="right")
    table.add_column("r_B sim (µm)", justify="right")
    table.add_column("r_B model (µm)", justify="right")
    by_scenario = {p.scenario: p for p in result.radii}
    for scan in result.scans:
        diffs = [abs(sim - m) for sim, m in zip(scan.prr_sim, scan.prr_model, strict=True) if m is not None]
        radius = by_scenario.get(scan.scenario)
        table.add_row(
            scan.scenario.label(),
            f"{max(diffs):.4f}" if diffs else "—",
            f"{radius.rb_sim:.4f}" if radius else "—",
            f"{radius.rb_model:.4f}" if radius and radius.rb_model is not None else "—",
        )
    return table


@handle_rydblock_errors("pair")
def execute_pair(progress: Progress, task: int, console: Console, config: PairConfig) -> PairResult:
    """Compute and write the pair artifacts under the command's error handling.

    pair_prr.csv is written before radius extraction starts, so a bracketing failure still
    leaves the scan data behind.
    """

    def advance() -> None:
        progress.advance(task)

    with ArtifactWriter(config) as writer:
        scans = scan_pair_scenarios(config, advance)
        write_pair_scans(writer, scans)
        radii: list[PairRadius] = []
        if config.extract_radius:
            radii = extract_pair_radii(config, [s.scenario for s in scans], advance)
            write_pair_radii(writer, radii)
    return PairResult(scans, radii)


def run_pair(config: PairConfig, console: Console | None = None) -> PairResult:
    """Run `rydblock pair` with a progress display and a summary table.

    Args:
        config: Pair configuration with a resolved output directory
        console: Console for progress and summary output

    Returns:
        The computed scans and radii
    """
    console = console or Console()
    n_cases = len(config.scenarios) * len(config.omegas)
    total = n_cases * config.r_points + (n_cases if config.extract_radius else 0)
    with create_rydblock_progress(console=console) as progress:
        task = create_task_with_rydblock(progress, "Simulating atom pairs...", total=total)
        result = execute_pair(progress, task, console, config)

    console.print(_summary_table(result))
    console.print()
    console.print(create_status(f"Pair data written to {config.output_dir}", "success"))
    return result
