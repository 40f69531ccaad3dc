"""Local-drive gradient fitting.

For a locally driven pair the simulated P_RR(r) curve is mapped onto the sequential curve at
Ω_eff with

    r → (Δ/Δπ)·(r − r_B^L) + r_B^π,     Δπ = 3 / r_B^π,

and Δ is chosen to minimize the fluctuability-weighted L1 distance between the two. Sweeping
(Ω₀, Ω₁) then gives Δ against 1/r_B^π(Ω_eff), whose through-origin slope is the local gradient
constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike
from scipy import optimize
from scipy.stats import qmc

from ..shared.config import (
    C6_N70,
    FIT_COMBINATIONS,
    FIT_OMEGA0_RANGE,
    FIT_RATIO_RANGE,
    FLUCTUABILITY_CAP,
    FLUCTUABILITY_WINDOW,
    SEQUENTIAL_GRADIENT,
)
from ..shared.error_handling import ValidationError
from ..shared.log import get_logger
from .closed_form import omega_eff, rb_local, rb_pi

logger = get_logger(__name__)

# Search interval for Δ in units of 1/r_B^π
GRADIENT_BOUNDS = (1.0, 10.0)
_CHECK_GRID = 64
_PRR_TOL = 1e-9


def fluctuability(prr_series: ArrayLike, window: int = FLUCTUABILITY_WINDOW) -> np.ndarray:
    """Per-point share of non-monotone motion in a centered window.

    F_i is the total size of the decreases inside the window around i divided by the total
    variation there; 0 for a window with no variation. Windows are clipped at the ends of the
    series and values are capped at 0.99.
    """
    series = np.asarray(prr_series, dtype=np.float64)
    if series.ndim != 1 or series.size < 3:
        raise ValidationError("fluctuability needs a series of at least 3 points")
    half = window // 2
    weights = np.zeros(series.size)
    for i in range(series.size):
        steps = np.diff(series[max(0, i - half) : i + half + 1])
        total = np.abs(steps).sum()
        if total > 0:
            weights[i] = -steps[steps < 0].sum() / total
    return np.clip(weights, 0.0, FLUCTUABILITY_CAP)


@dataclass(frozen=True)
class FitSample:
    """Simulated local-drive P_RR over a grid of separations."""

    omega0: float
    omega1: float
    r_values: np.ndarray
    prr_values: np.ndarray
    fluctuability: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        r = np.asarray(self.r_values, dtype=np.float64)
        prr = np.asarray(self.prr_values, dtype=np.float64)
        if r.ndim != 1 or r.shape != prr.shape:
            raise ValidationError("r_values and prr_values must be 1-D and the same length")
        if np.any(np.diff(r) <= 0):
            raise ValidationError("r_values must be strictly increasing")
        if np.any(prr < -_PRR_TOL) or np.any(prr > 1 + _PRR_TOL):
            raise ValidationError("prr_values must lie in [0, 1]")
        object.__setattr__(self, "r_values", r)
        object.__setattr__(self, "prr_values", np.clip(prr, 0.0, 1.0))
        weights = fluctuability(prr) if self.fluctuability is None else np.asarray(self.fluctuability, dtype=float)
        if weights.shape != r.shape or np.any(weights < 0) or np.any(weights >= 1):
            raise ValidationError("fluctuability weights must lie in [0, 1), one per point")
        object.__setattr__(self, "fluctuability", weights)

    @property
    def omega_eff(self) -> float:
        return omega_eff(self.omega0, self.omega1)


@dataclass(frozen=True)
class GradientFit:
    gradient: float
    objective: float
    quality_ok: bool
    rb_pi: float
    rb_local: float

    @property
    def scaled_gradient(self) -> float:
        """Δ·r_B^π, the dimensionless gradient."""
        return self.gradient * self.rb_pi


def mapped_sequential_prr(
    r: np.ndarray, gradient: float, rb_pi_um: float, rb_local_um: float, omega: float, c6: float = C6_N70
) -> np.ndarray:
    """Sequential curve at Ω evaluated at the mapped separations (0 where the map is ≤ 0)."""
    delta_pi = SEQUENTIAL_GRADIENT / rb_pi_um
    mapped = (gradient / delta_pi) * (np.asarray(r, dtype=np.float64) - rb_local_um) + rb_pi_um
    out = np.zeros_like(mapped)
    ok = mapped > 0
    x = c6 / (omega * mapped[ok] ** 6)
    out[ok] = 1.0 / (1.0 + x**2)
    return out


def fit_local_gradient(sample: FitSample, c6: float = C6_N70) -> GradientFit:
    """Fit Δ for one (Ω₀, Ω₁) sample.

    Bounded golden-section/Brent search over Δ ∈ [1, 10]/r_B^π, then a grid check: if any grid
    point beats the search result the objective is not unimodal there, the best grid point is
    returned and `quality_ok` is False.
    """
    omega = sample.omega_eff
    rbp = rb_pi(omega, c6)
    rbl = rb_local(sample.omega0, sample.omega1, c6)
    if not (sample.r_values[0] < rbl < sample.r_values[-1]):
        raise ValidationError(
            f"sample r range [{sample.r_values[0]:.4g}, {sample.r_values[-1]:.4g}] µm does not straddle r_B^L = {rbl:.4g} µm"
        )
    weights = 1.0 - sample.fluctuability

    def objective(gradient: float) -> float:
        model = mapped_sequential_prr(sample.r_values, gradient, rbp, rbl, omega, c6)
        return float(np.sum(np.abs(model - sample.prr_values) * weights))

    lo, hi = GRADIENT_BOUNDS[0] / rbp, GRADIENT_BOUNDS[1] / rbp
    result = optimize.minimize_scalar(objective, bounds=(lo, hi), method="bounded", options={"xatol": 1e-7 / rbp})
    best_x, best_f = float(result.x), float(result.fun)

    grid = np.linspace(lo, hi, _CHECK_GRID)
    grid_f = np.array([objective(g) for g in grid])
    k = int(np.argmin(grid_f))
    quality_ok = True
    if grid_f[k] < best_f - 1e-9 * (1.0 + abs(best_f)):
        logger.debug("Ω₀=%.4g Ω₁=%.4g: objective not unimodal, using grid point", sample.omega0, sample.omega1)
        best_x, best_f, quality_ok = float(grid[k]), float(grid_f[k]), False
    return GradientFit(gradient=best_x, objective=best_f, quality_ok=quality_ok, rb_pi=rbp, rb_local=rbl)


def fit_sweep_combinations(count: int = FIT_COMBINATIONS) -> list[tuple[float, float]]:
    """Deterministic (Ω₀, Ω₁) pairs for the gradient sweep.

    Unscrambled Halton points (origin skipped) mapped to Ω₀ ∈ [1, 5] rad/µs and
    Ω₁/Ω₀ ∈ [0.4, 1].
    """
    if count < 1:
        raise ValidationError(f"combination count must be positive, got {count}")
    sampler = qmc.Halton(d=2, scramble=False)
    sampler.fast_forward(1)
    points = qmc.scale(sampler.random(count), [FIT_OMEGA0_RANGE[0], FIT_RATIO_RANGE[0]], [FIT_OMEGA0_RANGE[1], FIT_RATIO_RANGE[1]])
    return [(float(o0), float(o0 * ratio)) for o0, ratio in points]


def fit_gradient_slope(inv_rb: ArrayLike, gradients: ArrayLike, weights: ArrayLike | None = None) -> float:
    """Through-origin slope s minimizing Σ w_i·|g_i − s·x_i|.

    The minimizer is the weighted median of g_i/x_i with weights w_i·x_i.
    """
    x = np.asarray(inv_rb, dtype=np.float64)
    g = np.asarray(gradients, dtype=np.float64)
    w = np.ones_like(x) if weights is None else np.asarray(weights, dtype=np.float64)
    if not (x.shape == g.shape == w.shape) or x.size == 0:
        raise ValidationError("inv_rb, gradients and weights must be non-empty and the same length")
    if np.any(x <= 0) or np.any(w < 0):
        raise ValidationError("inv_rb must be positive and weights non-negative")
    ratios = g / x
    mass = w * x
    if mass.sum() <= 0:
        raise ValidationError("all fit weights are zero")
    order = np.argsort(ratios)
    cumulative = np.cumsum(mass[order])
    k = int(np.searchsorted(cumulative, 0.5 * cumulative[-1]))
    return float(ratios[order][k])
