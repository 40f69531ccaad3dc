"""Blockade models module.

Closed-form two-atom blockade radii and peak populations, the exact global-drive four-level
bound, two-atom simulations and the local-gradient fit.
"""

from .closed_form import (
    omega_eff,
    omega_for_global_radius,
    omega_for_sequential_radius,
    prr_global_simplified,
    prr_local,
    prr_sequential,
    rb_global,
    rb_local,
    rb_pi,
    rb_sequential,
)
from .fitting import (
    FitSample,
    GradientFit,
    fit_gradient_slope,
    fit_local_gradient,
    fit_sweep_combinations,
    fluctuability,
)
from .four_level import FourLevelParams, ground_to_double_weights, prr_global_exact, symmetric_block_eigenvalues
from .simulation import DriveKind, DriveScenario, prr_long_time, rb_from_simulation, scan_prr, simulate_prr

__all__ = [
    "DriveKind",
    "DriveScenario",
    "FitSample",
    "FourLevelParams",
    "GradientFit",
    "fit_gradient_slope",
    "fit_local_gradient",
    "fit_sweep_combinations",
    "fluctuability",
    "ground_to_double_weights",
    "omega_eff",
    "omega_for_global_radius",
    "omega_for_sequential_radius",
    "prr_global_exact",
    "prr_global_simplified",
    "prr_local",
    "prr_long_time",
    "prr_sequential",
    "rb_from_simulation",
    "rb_global",
    "rb_local",
    "rb_pi",
    "rb_sequential",
    "scan_prr",
    "simulate_prr",
    "symmetric_block_eigenvalues",
]
