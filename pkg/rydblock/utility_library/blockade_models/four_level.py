"""Exact two-atom spectrum under a global drive.

With A = −δ, B = Ω/2 and C = C6/r⁶ − 2δ the two-atom Hamiltonian in the basis
(|gg⟩, |Rg⟩, |gR⟩, |RR⟩) is

    [[0, B, B, 0],
     [B, A, 0, B],
     [B, 0, A, B],
     [0, B, B, C]]

The antisymmetric state (0, −1, 1, 0) has energy A. The other three energies are the roots of
λ³ − (A+C)λ² + (AC − 4B²)λ + 2B²C and have a trigonometric closed form; their eigenvectors are
((E−C)/E, (E−C)/2B, (E−C)/2B, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..shared.config import C6_N70, POLE_PERTURBATION, POLE_TOL
from ..shared.error_handling import BlockadePoleError, OutOfRegimeError, ValidationError
from ..shared.log import get_logger

logger = get_logger(__name__)

# Relative slack on P³ − M² before a negative discriminant is treated as real
_DISCRIMINANT_TOL = 1e-9


@dataclass(frozen=True)
class FourLevelParams:
    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c)):
            raise ValidationError(f"four-level parameters must be finite: {self}")

    @classmethod
    def from_drive(cls, r: float, omega: float, delta: float = 0.0, c6: float = C6_N70) -> FourLevelParams:
        if not r > 0:
            raise ValidationError(f"r must be positive, got {r}")
        return cls(a=-delta, b=omega / 2, c=c6 / r**6 - 2 * delta)

    def matrix(self) -> np.ndarray:
        a, b, c = self.a, self.b, self.c
        return np.array(
            [
                [0.0, b, b, 0.0],
                [b, a, 0.0, b],
                [b, 0.0, a, b],
                [0.0, b, b, c],
            ]
        )

    def cubic_invariants(self) -> tuple[float, float, float]:
        """(P, M, Q) of the trigonometric root formula."""
        a, b, c = self.a, self.b, self.c
        s = a + c
        p = -3 * a * c + 12 * b**2 + s**2
        m = 27 * b**2 * c + 4.5 * s * (a * c - 4 * b**2) - s**3
        disc = p**3 - m**2
        if p < 0 or disc < 0:
            scale = max(abs(p) ** 3, m**2, 1.0)
            if p < -_DISCRIMINANT_TOL * max(abs(p), 1.0) or disc < -_DISCRIMINANT_TOL * scale:
                raise OutOfRegimeError(f"cubic outside the trigonometric regime (P = {p:.6g}, P³ − M² = {disc:.6g})")
            p, disc = max(p, 0.0), max(disc, 0.0)
        return p, m, math.sqrt(disc)


def symmetric_block_eigenvalues(params: FourLevelParams) -> tuple[float, float, float]:
    """Closed-form energies (E2, E3, E4) of the symmetric block, ascending.

    Raises:
        OutOfRegimeError: P < 0 or P³ < M² beyond rounding
    """
    p, m, q = params.cubic_invariants()
    s = params.a + params.c
    # atan2 keeps the angle in [0, π] for either sign of M; M = 0 gives π/2
    third = math.atan2(q, m) / 3
    root_p = math.sqrt(p)
    e2 = (s - 2 * root_p * math.cos(third)) / 3
    e3 = (s + root_p * math.cos(third) - math.sqrt(3 * p) * math.sin(third)) / 3
    e4 = (s + root_p * math.cos(third) + math.sqrt(3 * p) * math.sin(third)) / 3
    return e2, e3, e4


def ground_to_double_weights(params: FourLevelParams) -> np.ndarray:
    """λ_i·β_i for each symmetric eigenvector: ⟨gg|v_i⟩⟨v_i|RR⟩.

    Raises:
        BlockadePoleError: an energy vanishes, leaving (E − C)/E undefined
    """
    if params.b == 0:
        raise ValidationError("B = Ω/2 must be non-zero")
    energies = np.array(symmetric_block_eigenvalues(params))
    if np.any(np.abs(energies) < POLE_TOL):
        raise BlockadePoleError(f"eigenvalue within {POLE_TOL:g} of zero (C = {params.c:.3g})")
    first = (energies - params.c) / energies
    middle = (energies - params.c) / (2 * params.b)
    length_sq = first**2 + 2 * middle**2 + 1.0
    return first / length_sq


def _prr_bound(params: FourLevelParams) -> float:
    weights = np.abs(ground_to_double_weights(params))
    # Σ w_i² + 2Σ_{i>j} |w_i w_j| = (Σ |w_i|)²
    return float(weights.sum() ** 2)


def prr_global_exact(r: float, omega: float, delta: float = 0.0, c6: float = C6_N70) -> float:
    """Long-time upper bound of the |RR⟩ population starting from |gg⟩ under a global drive.

    Args:
        r: Separation in µm
        omega: Drive amplitude in rad/µs
        delta: Detuning in rad/µs
        c6: Interaction coefficient

    Returns:
        (Σ_i |λ_i β_i|)² over the three symmetric eigenvectors
    """
    if not r > 0 or not omega > 0:
        raise ValidationError(f"r and omega must be positive, got r={r}, omega={omega}")
    try:
        return _prr_bound(FourLevelParams.from_drive(r, omega, delta, c6))
    except BlockadePoleError:
        nudged = r * (1 + POLE_PERTURBATION)
        logger.debug("pole at r=%.12g, retrying at %.12g", r, nudged)
        return _prr_bound(FourLevelParams.from_drive(nudged, omega, delta, c6))
