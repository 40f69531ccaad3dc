"""Local-gradient fitting sweep behind `rydblock fit`.

For each (Ω₀, Ω₁) combination: simulate the locally driven pair over the r grid, fit the local
gradient, compare with `prr_local` and extract the simulated r_B. The per-combination
gradients are then fitted against 1/r_B^π(Ω_eff) through the origin.

This module provides the computation. For CLI usage, use fit_cli.py

Python API usage:
    from rydblock.utility_library.blockade_models.fit_runner import compute_fit
    from rydblock.utility_library.shared.experiment import FitConfig

    result = compute_fit(FitConfig(combinations=20))
    result.slope
"""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from rich.console import Console
from rich.progress import Progress
from rich.table import Table

from ..shared.artifacts import ArtifactWriter
from ..shared.config import LOCAL_GRADIENT
from ..shared.error_handling import BracketError, ValidationError, handle_rydblock_errors
from ..shared.experiment import FitConfig
from ..shared.log import get_logger
from ..shared.parallel import parallel_map
from ..shared.progress import create_rydblock_progress, create_task_with_rydblock
from ..shared.ui_theme import COLORS, create_status
from .closed_form import prr_local, rb_local
from .fitting import FitSample, GradientFit, fit_gradient_slope, fit_local_gradient, fit_sweep_combinations
from .simulation import DriveScenario, prr_long_time, rb_from_simulation, scan_prr

logger = get_logger(__name__)

GRADIENT_COLUMNS = (
    "omega0", "omega1", "omega_eff", "inv_rb_eff", "grad_fit", "fluctuability_mean", "quality_ok",
)
RADIUS_COLUMNS = ("omega0", "omega1", "rb_sim_um", "rb_model_um")
RESIDUAL_COLUMNS = ("omega0", "omega1", "r_um", "prr_sim", "prr_model", "residual", "prr_long_time")


@dataclass(frozen=True)
class FitCase:
    """Everything computed for one (Ω₀, Ω₁) combination."""

    sample: FitSample
    fit: GradientFit
    prr_model: np.ndarray
    prr_long_time: np.ndarray
    rb_sim: float | None
    rb_model: float

    @property
    def inv_rb_eff(self) -> float:
        return 1.0 / self.fit.rb_pi

    @property
    def weight(self) -> float:
        """Mean of 1 − F_i over the sample."""
        return float(np.mean(1.0 - self.sample.fluctuability))

    @property
    def max_residual(self) -> float:
        return float(np.max(np.abs(self.sample.prr_values - self.prr_model)))

    @property
    def max_long_time_residual(self) -> float:
        """Largest gap between the model and the unbounded-quench supremum."""
        return float(np.max(np.abs(self.prr_long_time - self.prr_model)))


@dataclass(frozen=True)
class FitResult:
    cases: list[FitCase]
    slope: float

    @property
    def relative_error(self) -> float:
        return abs(self.slope - LOCAL_GRADIENT) / LOCAL_GRADIENT

    @property
    def max_residual(self) -> float:
        return max(case.max_residual for case in self.cases)

    @property
    def max_long_time_residual(self) -> float:
        return max(case.max_long_time_residual for case in self.cases)


def check_fit_config(config: FitConfig) -> None:
    if config.combinations < 1:
        raise ValidationError(f"need at least one combination, got {config.combinations}")
    if not 0 < config.r_min < config.r_max:
        raise ValidationError(f"need 0 < r_min < r_max, got [{config.r_min}, {config.r_max}]")
    if config.r_points < 3:
        raise ValidationError("r grid needs at least 3 points")
    if not (config.duration > 0 and config.dt > 0 and config.tol_r > 0):
        raise ValidationError("duration, dt and tol_r must be positive")


def fit_combination(config: FitConfig, omega0: float, omega1: float) -> FitCase:
    """Simulate, fit and compare one combination."""
    scenario = DriveScenario.local(omega0, omega1)
    r_values = np.linspace(config.r_min, config.r_max, config.r_points)
    prr = scan_prr(scenario, r_values, config.duration, config.dt, config.c6, workers=1)
    sample = FitSample(omega0, omega1, r_values, prr)
    fit = fit_local_gradient(sample, config.c6)
    model = np.asarray(prr_local(r_values, omega0, omega1, config.c6))
    long_time = np.array([prr_long_time(scenario, float(r), config.c6) for r in r_values])
    try:
        rb_sim: float | None = rb_from_simulation(scenario, config.duration, config.tol_r, config.dt, config.c6)
    except BracketError as e:
        logger.warning("Ω₀=%.4g Ω₁=%.4g: no r_B (%s)", omega0, omega1, e)
        rb_sim = None
    return FitCase(sample, fit, model, long_time, rb_sim, rb_local(omega0, omega1, config.c6))


def compute_fit(config: FitConfig, on_done: Callable[[], None] | None = None) -> FitResult:
    """Run the whole sweep and the through-origin slope fit."""
    check_fit_config(config)
    combinations = fit_sweep_combinations(config.combinations)
    cases = parallel_map(lambda pair: fit_combination(config, *pair), combinations, config.workers, on_done)
    flagged = sum(not case.fit.quality_ok for case in cases)
    if flagged:
        logger.warning("%d of %d gradient fits fell back to the grid check", flagged, len(cases))
    slope = fit_gradient_slope(
        [case.inv_rb_eff for case in cases],
        [case.fit.gradient for case in cases],
        [case.weight for case in cases],
    )
    logger.debug("local gradient slope %.6f (target %.3f)", slope, LOCAL_GRADIENT)
    return FitResult(cases, slope)


def write_fit(writer: ArtifactWriter, result: FitResult) -> None:
    gradient_rows = []
    radius_rows = []
    residual_rows = []
    for case in result.cases:
        s = case.sample
        gradient_rows.append(
            (s.omega0, s.omega1, s.omega_eff, case.inv_rb_eff, case.fit.gradient,
             float(np.mean(s.fluctuability)), case.fit.quality_ok)
        )
        radius_rows.append((s.omega0, s.omega1, case.rb_sim, case.rb_model))
        for r, sim, model, bound in zip(s.r_values, s.prr_values, case.prr_model, case.prr_long_time, strict=True):
            residual_rows.append(
                (s.omega0, s.omega1, float(r), float(sim), float(model), float(sim - model), float(bound))
            )
    writer.write_csv("fit_gradients.csv", GRADIENT_COLUMNS, gradient_rows)
    writer.write_csv("fit_radii.csv", RADIUS_COLUMNS, radius_rows)
    writer.write_csv("fit_residuals.csv", RESIDUAL_COLUMNS, residual_rows)
    writer.write_json(
        "fit_summary.json",
        {
            "slope": result.slope,
            "target": LOCAL_GRADIENT,
            "relative_error": result.relative_error,
            "max_abs_residual": result.max_residual,
            "max_abs_residual_long_time": result.max_long_time_residual,
            "combinations": len(result.cases),
            "flagged": sum(not case.fit.quality_ok for case in result.cases),
        },
    )


def _summary_table(result: FitResult) -> Table:
    table = Table(header_style=f"bold {COLORS['primary']}", border_style=COLORS["muted"], box=None)
    table.add_column("Quantity", style=COLORS["secondary"])
    table.add_column("Value", justify="right")
    table.add_row("Combinations", str(len(result.cases)))
    table.add_row("Gradient slope", f"{result.slope:.4f}")
    table.add_row("Reference slope", f"{LOCAL_GRADIENT:.3f}")
    table.add_row("Relative error", f"{100 * result.relative_error:.2f}%")
    table.add_row("max |P_RR sim − model|", f"{result.max_residual:.4f}")
    table.add_row("max |P_RR long-time − model|", f"{result.max_long_time_residual:.4f}")
    missing = sum(case.rb_sim is None for case in result.cases)
    if missing:
        table.add_row("Combinations without r_B", str(missing))
    return table


@handle_rydblock_errors("fit")
def execute_fit(progress: Progress, task: int, console: Console, config: FitConfig) -> FitResult:
    """Compute and write the fit artifacts under the command's error handling."""

    def advance() -> None:
        progress.advance(task)

    with ArtifactWriter(config) as writer:
        result = compute_fit(config, advance)
        write_fit(writer, result)
    return result


def run_fit(config: FitConfig, console: Console | None = None) -> FitResult:
    """Run `rydblock fit` with a progress display and a summary table.

    Args:
        config: Fit configuration with a resolved output directory
        console: Console for progress and summary output

    Returns:
        Per-combination fits and the gradient slope
    """
    console = console or Console()
    with create_rydblock_progress(console=console) as progress:
        task = create_task_with_rydblock(progress, "Fitting local gradients...", total=config.combinations)
        result = execute_fit(progress, task, console, config)

    console.print(_summary_table(result))
    console.print()
    console.print(create_status(f"Fit data written to {config.output_dir}", "success"))
    return result
