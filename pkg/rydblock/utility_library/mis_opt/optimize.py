"""Drive-parameter optimization of the MIS probability.

(κ, δ_f) is found by a coarse grid over the bounds, evaluated on the worker pool, followed by a
bounded Nelder–Mead refinement started from the best grid point. Both stages are deterministic.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy.optimize import minimize

from ..graphs.disk_graph import AbstractGraph, DiskGraph
from ..shared.config import (
    C6_N70,
    DELTA_F_BOUNDS,
    FLAT_OBJECTIVE_TOL,
    GRID_POINTS,
    KAPPA_BOUNDS,
    SIMPLEX_BUDGET,
)
from ..shared.error_handling import DimensionMismatchError, ValidationError
from ..shared.log import get_logger
from ..shared.parallel import parallel_map
from .ground_state import (
    DriveMode,
    FinalDriveParams,
    GroundSpace,
    IndependenceProfile,
    delta_k,
    final_hamiltonian,
    ground_space,
)

logger = get_logger(__name__)

Bounds = tuple[float, float]


@dataclass(frozen=True, eq=False)
class MISReport:
    """Ground-state statistics of one drive mode at its (optimized) parameters.

    `p_mis_k[k]` is the probability of an independent set of size at least |MIS| − k, for
    k = 0..|MIS|. `flagged` marks a report whose grid never rose above zero, so its parameters
    are the first grid point rather than an optimum.
    """

    mode: DriveMode
    params: FinalDriveParams
    p_mis: float
    p_mis_k: tuple[float, ...]
    violation_weight: float
    ground_degeneracy: int
    mis_size: int
    flagged: bool = False
    gap: float | None = None


@dataclass(frozen=True, eq=False)
class ModeComparison:
    local: MISReport
    global_: MISReport
    deltas: tuple[float | None, ...]

    @property
    def violation_ratio(self) -> float | None:
        return violation_ratio(self.local, self.global_)


def _check_pair(dg: DiskGraph, g: AbstractGraph) -> None:
    if g.n != dg.n:
        raise DimensionMismatchError(f"graph has {g.n} vertices, disk graph has {dg.n}")


def check_search_bounds(kappa_bounds: Bounds, delta_f_bounds: Bounds, grid_points: int, budget: int) -> None:
    """Raise ValidationError unless the (κ, δ_f) box and search sizes are usable."""
    for name, (lo, hi) in (("kappa", kappa_bounds), ("delta_f", delta_f_bounds)):
        if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
            raise ValidationError(f"{name} bounds must be finite with low < high, got ({lo}, {hi})")
    if kappa_bounds[0] <= 0:
        raise ValidationError(f"kappa bounds must be positive, got {kappa_bounds}")
    if grid_points < 2:
        raise ValidationError(f"need at least 2 grid points per axis, got {grid_points}")
    if budget < 0:
        raise ValidationError(f"simplex budget must be non-negative, got {budget}")


def _statistics(
    dg: DiskGraph, profile: IndependenceProfile, params: FinalDriveParams, mode: DriveMode, c6: float
) -> tuple[GroundSpace, np.ndarray]:
    ground = ground_space(final_hamiltonian(dg, params, mode, c6))
    return ground, ground.probabilities()


def _report(
    dg: DiskGraph,
    profile: IndependenceProfile,
    params: FinalDriveParams,
    mode: DriveMode,
    c6: float,
    flagged: bool = False,
) -> MISReport:
    ground, weights = _statistics(dg, profile, params, mode, c6)
    ladder = tuple(profile.p_mis_k(weights, k) for k in range(profile.mis_size + 1))
    return MISReport(
        mode=mode,
        params=params,
        p_mis=ladder[0],
        p_mis_k=ladder,
        violation_weight=profile.violation(weights),
        ground_degeneracy=ground.degeneracy,
        mis_size=profile.mis_size,
        flagged=flagged,
        gap=ground.gap,
    )


def mis_report(
    dg: DiskGraph,
    params: FinalDriveParams,
    mode: DriveMode | str = DriveMode.LOCAL,
    g: AbstractGraph | None = None,
    c6: float = C6_N70,
) -> MISReport:
    """Report at fixed (κ, δ_f); g defaults to the instance's target graph."""
    g = g or dg.target_graph()
    _check_pair(dg, g)
    return _report(dg, IndependenceProfile.of(g), params, DriveMode(mode), c6)


def _initial_simplex(x0: np.ndarray, lows: np.ndarray, highs: np.ndarray, steps: np.ndarray) -> np.ndarray:
    simplex = [x0]
    for axis in range(len(x0)):
        vertex = x0.copy()
        vertex[axis] += steps[axis] if x0[axis] + steps[axis] <= highs[axis] else -steps[axis]
        simplex.append(np.clip(vertex, lows, highs))
    return np.array(simplex)


def optimize_drive(
    dg: DiskGraph,
    g: AbstractGraph | None = None,
    mode: DriveMode | str = DriveMode.LOCAL,
    kappa_bounds: Bounds = KAPPA_BOUNDS,
    delta_f_bounds: Bounds = DELTA_F_BOUNDS,
    grid_points: int = GRID_POINTS,
    budget: int = SIMPLEX_BUDGET,
    c6: float = C6_N70,
    workers: int | None = None,
    on_done: Callable[[], None] | None = None,
) -> MISReport:
    """Maximize the MIS probability over (κ, δ_f) and report at the optimum.

    Args:
        dg: Disk graph providing positions and radii
        g: Graph whose MIS is scored (default: the instance's target graph)
        mode: Local or global drive
        kappa_bounds: κ search interval
        delta_f_bounds: δ_f search interval in rad/µs
        grid_points: Grid points per axis
        budget: Function evaluations allowed to the simplex stage (0 skips it)
        c6: Interaction coefficient
        workers: Thread pool size for the grid
        on_done: Called once per grid point

    Returns:
        Report at the best parameters; flagged when P_MIS is zero over the whole grid

    Raises:
        ValidationError: invalid bounds or a graph that does not match the instance
        GraphTooLargeError: the graph is too large for exhaustive MIS enumeration
    """
    mode = DriveMode(mode)
    g = g or dg.target_graph()
    _check_pair(dg, g)
    check_search_bounds(kappa_bounds, delta_f_bounds, grid_points, budget)
    profile = IndependenceProfile.of(g)
    lows = np.array([kappa_bounds[0], delta_f_bounds[0]])
    highs = np.array([kappa_bounds[1], delta_f_bounds[1]])

    def p_mis(x: np.ndarray) -> float:
        kappa, delta_f = np.clip(x, lows, highs)
        _, weights = _statistics(dg, profile, FinalDriveParams(float(kappa), float(delta_f)), mode, c6)
        return profile.p_mis_k(weights, 0)

    grid = [
        np.array([kappa, delta_f])
        for kappa in np.linspace(*kappa_bounds, grid_points)
        for delta_f in np.linspace(*delta_f_bounds, grid_points)
    ]
    values = parallel_map(p_mis, grid, workers, on_done)
    best = int(np.argmax(values))
    x_best, p_best = grid[best], values[best]

    if p_best < FLAT_OBJECTIVE_TOL:
        logger.warning("%s/%s: P_MIS vanishes on the whole grid; reporting a flagged result", g.name, mode)
        params = FinalDriveParams(float(grid[0][0]), float(grid[0][1]))
        return _report(dg, profile, params, mode, c6, flagged=True)

    if budget > 0:
        steps = 0.5 * (highs - lows) / (grid_points - 1)
        result = minimize(
            lambda x: -p_mis(x),
            x_best,
            method="Nelder-Mead",
            bounds=list(zip(lows, highs, strict=True)),
            options={
                "maxfev": budget,
                "initial_simplex": _initial_simplex(x_best, lows, highs, steps),
                "xatol": 1e-6,
                "fatol": 1e-12,
            },
        )
        logger.debug("%s/%s: simplex %d evaluations, P_MIS %.6g -> %.6g", g.name, mode, result.nfev, p_best, -result.fun)
        if -result.fun > p_best:
            x_best, p_best = np.clip(result.x, lows, highs), -float(result.fun)

    params = FinalDriveParams(float(x_best[0]), float(x_best[1]))
    logger.info("%s/%s: P_MIS = %.6g at kappa = %.4g, delta_f = %.4g", g.name, mode, p_best, params.kappa, params.delta_f)
    return _report(dg, profile, params, mode, c6)


def enhancement(local: MISReport, global_: MISReport) -> tuple[float | None, ...]:
    """Δ_k for k = 0..|MIS| between the two modes' own optima."""
    if local.mis_size != global_.mis_size:
        raise ValidationError("reports describe different graphs")
    return tuple(delta_k(pl, pg) for pl, pg in zip(local.p_mis_k, global_.p_mis_k, strict=True))


def violation_ratio(local: MISReport, global_: MISReport) -> float | None:
    """Global over local violation weight; None when both are zero, inf when only local is."""
    if local.violation_weight == 0:
        return None if global_.violation_weight == 0 else float("inf")
    return global_.violation_weight / local.violation_weight


def compare_modes(
    dg: DiskGraph,
    g: AbstractGraph | None = None,
    workers: int | None = None,
    on_done: Callable[[], None] | None = None,
    **options: Any,
) -> ModeComparison:
    """Optimize both drive modes and compute the enhancement ladder.

    Extra keyword arguments (bounds, grid_points, budget, c6) go to `optimize_drive`.
    """
    local = optimize_drive(dg, g, DriveMode.LOCAL, workers=workers, on_done=on_done, **options)
    global_ = optimize_drive(dg, g, DriveMode.GLOBAL, workers=workers, on_done=on_done, **options)
    return ModeComparison(local, global_, enhancement(local, global_))
