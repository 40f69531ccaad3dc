"""Closed-form two-atom blockade models.

Three drive scenarios, all at δ = 0 unless a detuning argument is taken:

- sequential: one atom is already in |R⟩ and only the other is driven (exact two-level result)
- global: both atoms driven with the same Ω
- local: the atoms driven with different Ω₀, Ω₁

Radii are in µm, amplitudes in rad/µs. Every function takes `c6` so the n = 82 preset can be
used; `r` arguments accept scalars or numpy arrays.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from ..shared.config import (
    C6_N70,
    GLOBAL_CURVE_COEFFS,
    GLOBAL_RADIUS_FACTOR,
    LOCAL_CURVE_COEFFS,
)
from ..shared.error_handling import ValidationError

FloatOrArray = float | np.ndarray


def _scalar_or_array(value: np.ndarray) -> FloatOrArray:
    return float(value) if value.ndim == 0 else value


def _positive(name: str, value: ArrayLike) -> np.ndarray:
    arr = np.asarray(value, dtype=np.float64)
    if not np.all(arr > 0):
        raise ValidationError(f"{name} must be positive")
    return arr


def rb_pi(omega: float, c6: float = C6_N70) -> float:
    """(C6/Ω)^(1/6): the sequential radius at zero detuning."""
    return float((c6 / float(_positive("omega", omega))) ** (1 / 6))


def rb_sequential(omega: float, delta: float = 0.0, c6: float = C6_N70) -> float:
    """Blockade radius with one atom pre-excited: (C6/(Ω+δ))^(1/6)."""
    if not omega + delta > 0:
        raise ValidationError(f"omega + delta must be positive, got {omega + delta}")
    return float((c6 / (omega + delta)) ** (1 / 6))


def prr_sequential(r: ArrayLike, omega: float, delta: float = 0.0, c6: float = C6_N70) -> FloatOrArray:
    """Peak |RR⟩ population with one atom pre-excited: (1 + [(C6/r⁶ − δ)/Ω]²)⁻¹."""
    r = _positive("r", r)
    _positive("omega", omega)
    x = (c6 / r**6 - delta) / omega
    return _scalar_or_array(1.0 / (1.0 + x**2))


def rb_global(omega: float, c6: float = C6_N70) -> float:
    """Blockade radius under a global drive: 0.98·(C6/Ω)^(1/6)."""
    return GLOBAL_RADIUS_FACTOR * rb_pi(omega, c6)


def omega_eff(omega0: float, omega1: float) -> float:
    """Generalized mean of the two amplitudes with exponent −1/6."""
    _positive("omega0", omega0)
    _positive("omega1", omega1)
    if omega0 == omega1:
        return float(omega0)
    return float((0.5 * (omega0 ** (-1 / 6) + omega1 ** (-1 / 6))) ** -6)


def rb_local(omega0: float, omega1: float, c6: float = C6_N70) -> float:
    """Pairwise blockade radius under local drive: mean of the two global radii."""
    if omega0 == omega1:
        return rb_global(omega0, c6)
    return 0.5 * (rb_global(omega0, c6) + rb_global(omega1, c6))


def _mapped_curve(
    r: ArrayLike, omega: float, coeffs: tuple[float, float], c6: float
) -> FloatOrArray:
    r = _positive("r", r)
    scale, offset = coeffs
    shifted = scale * r - offset * rb_pi(omega, c6)
    if np.any(shifted <= 0):
        raise ValidationError(
            f"r below the curve domain ({scale}·r − {offset}·r_B ≤ 0 for r = {float(np.min(r)):.4g} µm)"
        )
    x = c6 / (omega * shifted**6)
    return _scalar_or_array(1.0 / (1.0 + x**2))


def prr_global_simplified(r: ArrayLike, omega: float, c6: float = C6_N70) -> FloatOrArray:
    """Simplified peak |RR⟩ population under a global drive (δ = 0).

    The sequential curve with r mapped to 1.29r − 0.26·r_B, r_B = (C6/Ω)^(1/6).
    """
    return _mapped_curve(r, float(_positive("omega", omega)), GLOBAL_CURVE_COEFFS, c6)


def prr_local(r: ArrayLike, omega0: float, omega1: float, c6: float = C6_N70) -> FloatOrArray:
    """Peak |RR⟩ population under local drive (δ = 0).

    The sequential curve at Ω_eff with r mapped to 1.18r − 0.16·r_B, r_B = (C6/Ω_eff)^(1/6).
    """
    return _mapped_curve(r, omega_eff(omega0, omega1), LOCAL_CURVE_COEFFS, c6)


def omega_for_global_radius(radius: float, c6: float = C6_N70) -> float:
    """Amplitude whose global blockade radius is `radius`: C6·(0.98/r)⁶."""
    return float(c6 * (GLOBAL_RADIUS_FACTOR / float(_positive("radius", radius))) ** 6)


def omega_for_sequential_radius(radius: float, c6: float = C6_N70) -> float:
    """Amplitude whose sequential radius at δ = 0 is `radius`: C6/r⁶."""
    return float(c6 / float(_positive("radius", radius)) ** 6)
