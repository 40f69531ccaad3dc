"""Two-atom quench simulations and blockade-radius extraction.

The blockade radius is the separation at which the peak |RR⟩ population over the quench equals
0.5. `rb_from_simulation` finds it by bisection on quench results.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from ..quantum_core.evolution import max_expectation, spectral_decomposition
from ..quantum_core.operators import basis_state, projector
from ..rydberg_model.hamiltonian import build_hamiltonian
from ..rydberg_model.register import AtomRegister, PhysicalConstants
from ..shared.config import C6_N70, DEFAULT_DT, PAIR_DURATION
from ..shared.error_handling import BracketError, ValidationError
from ..shared.log import get_logger
from ..shared.parallel import parallel_map
from .closed_form import (
    prr_global_simplified,
    prr_local,
    prr_sequential,
    rb_global,
    rb_local,
    rb_sequential,
)
from .four_level import prr_global_exact

logger = get_logger(__name__)

# |Rg⟩: atom 0 excited
_PRE_EXCITED = 1
_DOUBLE = 3

# Eigenvalues closer than this, relative to the spectral scale, share an eigenspace
_DEGENERACY_TOL = 1e-9

# Bisection search interval relative to the model radius
BRACKET_FACTORS = (0.5, 2.0)


class DriveKind(StrEnum):
    SEQUENTIAL = "sequential"
    GLOBAL = "global"
    LOCAL = "local"


@dataclass(frozen=True)
class DriveScenario:
    """How a pair of atoms is driven.

    Sequential drives only atom 1 (amplitude omega1) with atom 0 prepared in |R⟩; global and
    local drive both atoms from |gg⟩.
    """

    kind: DriveKind
    omega0: float
    omega1: float
    delta: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", DriveKind(self.kind))
        if self.omega0 < 0 or self.omega1 < 0:
            raise ValidationError("drive amplitudes must be non-negative")
        if self.kind is DriveKind.SEQUENTIAL and self.omega0 != 0:
            raise ValidationError("sequential drive leaves atom 0 undriven (omega0 = 0)")
        if self.kind is DriveKind.GLOBAL and self.omega0 != self.omega1:
            raise ValidationError("global drive needs omega0 == omega1")
        if self.omega1 <= 0 or (self.kind is not DriveKind.SEQUENTIAL and self.omega0 <= 0):
            raise ValidationError("driven atoms need a positive amplitude")

    @classmethod
    def sequential(cls, omega: float, delta: float = 0.0) -> DriveScenario:
        return cls(DriveKind.SEQUENTIAL, 0.0, omega, delta)

    @classmethod
    def global_drive(cls, omega: float, delta: float = 0.0) -> DriveScenario:
        return cls(DriveKind.GLOBAL, omega, omega, delta)

    @classmethod
    def local(cls, omega0: float, omega1: float) -> DriveScenario:
        return cls(DriveKind.LOCAL, omega0, omega1)

    @classmethod
    def local_from_average(cls, omega_avg: float, ratio: float) -> DriveScenario:
        """Local drive with mean amplitude omega_avg and Ω₁/Ω₀ = ratio."""
        if not ratio > 0:
            raise ValidationError(f"amplitude ratio must be positive, got {ratio}")
        omega0 = 2 * omega_avg / (1 + ratio)
        return cls.local(omega0, ratio * omega0)

    @property
    def initial_index(self) -> int:
        return _PRE_EXCITED if self.kind is DriveKind.SEQUENTIAL else 0

    def register(self, r: float, c6: float = C6_N70) -> AtomRegister:
        return AtomRegister.build(
            [(0.0, 0.0), (r, 0.0)],
            omegas=[self.omega0, self.omega1],
            deltas=self.delta,
            constants=PhysicalConstants(c6),
        )

    def model_radius(self, c6: float = C6_N70) -> float:
        if self.kind is DriveKind.SEQUENTIAL:
            return rb_sequential(self.omega1, self.delta, c6)
        if self.kind is DriveKind.GLOBAL:
            return rb_global(self.omega1, c6)
        return rb_local(self.omega0, self.omega1, c6)

    def model_prr(self, r: float, c6: float = C6_N70) -> float:
        """Closed-form peak population for this scenario."""
        if self.kind is DriveKind.SEQUENTIAL:
            return float(prr_sequential(r, self.omega1, self.delta, c6))
        if self.delta != 0:
            if self.kind is DriveKind.GLOBAL:
                return prr_global_exact(r, self.omega1, self.delta, c6)
            raise ValidationError("the local-drive model is defined at zero detuning only")
        if self.kind is DriveKind.GLOBAL:
            return float(prr_global_simplified(r, self.omega1, c6))
        return float(prr_local(r, self.omega0, self.omega1, c6))

    def label(self) -> str:
        if self.kind is DriveKind.LOCAL:
            return f"local Ω₀={self.omega0:.4g} Ω₁={self.omega1:.4g}"
        return f"{self.kind.value} Ω={self.omega1:.4g}"


def simulate_prr(
    scenario: DriveScenario,
    r: float,
    duration: float = PAIR_DURATION,
    dt: float = DEFAULT_DT,
    c6: float = C6_N70,
) -> float:
    """Peak |RR⟩ population over a quench at separation r."""
    h = build_hamiltonian(scenario.register(r, c6))
    value, _ = max_expectation(h, basis_state(2, scenario.initial_index), projector(_DOUBLE, n_atoms=2), duration, dt)
    return value


def prr_long_time(scenario: DriveScenario, r: float, c6: float = C6_N70) -> float:
    """Supremum of the |RR⟩ population over an unbounded quench.

    With P_E the eigenspace projectors, ⟨RR|ψ(t)⟩ = Σ_E e^{−iEt} ⟨RR|P_E|ψ₀⟩, so the population
    never exceeds (Σ_E |⟨RR|P_E|ψ₀⟩|)² and comes arbitrarily close when the level spacings are
    rationally independent. Every finite quench stays at or below it.
    """
    energies, vectors = spectral_decomposition(build_hamiltonian(scenario.register(r, c6)))
    weights = vectors[_DOUBLE] * vectors[scenario.initial_index].conj()
    scale = max(1.0, float(np.max(np.abs(energies))))
    levels = np.concatenate(([0], np.cumsum(np.diff(energies) > _DEGENERACY_TOL * scale)))
    per_level = np.bincount(levels, weights=weights.real) + 1j * np.bincount(levels, weights=weights.imag)
    return float(min(np.sum(np.abs(per_level)) ** 2, 1.0))


def scan_prr(
    scenario: DriveScenario,
    r_values: Sequence[float] | np.ndarray,
    duration: float = PAIR_DURATION,
    dt: float = DEFAULT_DT,
    c6: float = C6_N70,
    workers: int | None = None,
    on_done: Callable[[], None] | None = None,
) -> np.ndarray:
    """simulate_prr over a grid of separations."""
    values = parallel_map(
        lambda r: simulate_prr(scenario, float(r), duration, dt, c6), list(r_values), workers, on_done
    )
    return np.asarray(values, dtype=np.float64)


def rb_from_simulation(
    scenario: DriveScenario,
    duration: float = PAIR_DURATION,
    tol_r: float = 1e-3,
    dt: float = DEFAULT_DT,
    c6: float = C6_N70,
    bracket: tuple[float, float] | None = None,
) -> float:
    """Separation where the simulated peak population crosses 0.5.

    Args:
        scenario: Drive scenario
        duration: Quench length in µs
        tol_r: Final bracket width in µm
        dt: Sampling step in µs
        c6: Interaction coefficient
        bracket: Search interval in µm; defaults to [0.5, 2]× the model radius

    Returns:
        Midpoint of the final bracket

    Raises:
        BracketError: P_RR − 0.5 does not change sign on the interval
    """
    if not tol_r > 0:
        raise ValidationError(f"tol_r must be positive, got {tol_r}")
    if bracket is None:
        radius = scenario.model_radius(c6)
        bracket = (BRACKET_FACTORS[0] * radius, BRACKET_FACTORS[1] * radius)
    lo, hi = bracket

    def excess(r: float) -> float:
        return simulate_prr(scenario, r, duration, dt, c6) - 0.5

    f_lo, f_hi = excess(lo), excess(hi)
    if not (f_lo < 0 <= f_hi):
        raise BracketError(
            f"{scenario.label()}: P_RR − 0.5 has no sign change on [{lo:.4g}, {hi:.4g}] µm "
            f"(values {f_lo + 0.5:.4g}, {f_hi + 0.5:.4g}); try a longer quench"
        )
    steps = max(0, math.ceil(math.log2((hi - lo) / tol_r)))
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if excess(mid) < 0:
            lo = mid
        else:
            hi = mid
        logger.debug("%s bisection: [%.6f, %.6f]", scenario.label(), lo, hi)
    return 0.5 * (lo + hi)
