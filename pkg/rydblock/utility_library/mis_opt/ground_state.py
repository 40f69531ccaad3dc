"""Final Hamiltonians with finite drives and their ground-state statistics.

A disk graph becomes a register whose atoms sit at the disk centers, all detuned by δ_f and
driven with

    local:  Ω_i = κ·C6 / r_i⁶
    global: Ω   = κ·C6 / r_avg⁶,  r_avg = mean radius

so κ = 1 drives every atom at the strength of the interaction at its own blockade radius.
Probabilities are computational-basis weights of the ground state; a degenerate ground space
is read as the uniform mixture over its eigenvectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.typing import NDArray

from ..graphs.disk_graph import AbstractGraph, DiskGraph
from ..graphs.independence import independent_table, set_sizes
from ..quantum_core.evolution import spectral_decomposition
from ..quantum_core.operators import HermitianOperator
from ..rydberg_model.hamiltonian import build_hamiltonian
from ..rydberg_model.register import AtomRegister, PhysicalConstants
from ..shared.config import C6_N70, GROUND_REL_TOL
from ..shared.error_handling import DimensionMismatchError, ValidationError


class DriveMode(StrEnum):
    LOCAL = "local"
    GLOBAL = "global"


@dataclass(frozen=True)
class FinalDriveParams:
    """Drive strength κ (dimensionless) and final detuning δ_f (rad/µs)."""

    kappa: float
    delta_f: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.kappa) and self.kappa > 0):
            raise ValidationError(f"kappa must be positive, got {self.kappa}")
        if not math.isfinite(self.delta_f):
            raise ValidationError(f"delta_f must be finite, got {self.delta_f}")


def drive_amplitudes(
    dg: DiskGraph, params: FinalDriveParams, mode: DriveMode | str, c6: float = C6_N70
) -> NDArray[np.float64]:
    if DriveMode(mode) is DriveMode.LOCAL:
        return params.kappa * c6 / dg.radii**6
    r_avg = float(dg.radii.mean())
    return np.full(dg.n, params.kappa * c6 / r_avg**6)


def final_register(
    dg: DiskGraph, params: FinalDriveParams, mode: DriveMode | str, c6: float = C6_N70
) -> AtomRegister:
    return AtomRegister.build(
        dg.centers,
        omegas=drive_amplitudes(dg, params, mode, c6),
        deltas=params.delta_f,
        constants=PhysicalConstants(c6),
    )


def final_hamiltonian(
    dg: DiskGraph, params: FinalDriveParams, mode: DriveMode | str = DriveMode.LOCAL, c6: float = C6_N70
) -> HermitianOperator:
    """Rydberg Hamiltonian of the disk graph at (κ, δ_f) under the given drive mode."""
    return build_hamiltonian(final_register(dg, params, mode, c6))


@dataclass(frozen=True, eq=False)
class GroundSpace:
    """Lowest eigenspace of a Hamiltonian.

    Attributes:
        vectors: Orthonormal basis of the eigenspace, one column per vector
        energy: Lowest eigenvalue
        gap: Distance to the next distinct level; None when the whole spectrum is degenerate
    """

    vectors: NDArray[np.complex128]
    energy: float
    gap: float | None

    @property
    def degeneracy(self) -> int:
        return self.vectors.shape[1]

    @property
    def dimension(self) -> int:
        return self.vectors.shape[0]

    def probabilities(self) -> NDArray[np.float64]:
        """Basis weights ⟨b|ρ|b⟩ of the uniform mixture over the eigenspace."""
        return np.mean(np.abs(self.vectors) ** 2, axis=1)


def ground_space(hamiltonian: HermitianOperator, rel_tol: float = GROUND_REL_TOL) -> GroundSpace:
    """Eigenvectors within rel_tol·(spectral range) of the lowest eigenvalue."""
    energies, vectors = spectral_decomposition(hamiltonian)
    spread = float(energies[-1] - energies[0])
    degeneracy = int(np.count_nonzero(energies - energies[0] <= rel_tol * spread))
    gap = float(energies[degeneracy] - energies[0]) if degeneracy < len(energies) else None
    return GroundSpace(vectors[:, :degeneracy], float(energies[0]), gap)


@dataclass(frozen=True, eq=False)
class IndependenceProfile:
    """Independent-set masks of a graph, kept for repeated scoring of ground states."""

    table: NDArray[np.bool_]
    sizes: NDArray[np.int64]
    mis_size: int

    @classmethod
    def of(cls, g: AbstractGraph) -> IndependenceProfile:
        table = independent_table(g)
        sizes = set_sizes(g.n)
        return cls(table, sizes, int(sizes[table].max()))

    def _check(self, weights: NDArray[np.float64]) -> None:
        if weights.shape != self.table.shape:
            raise DimensionMismatchError(
                f"ground state has dimension {weights.shape[0]}, graph needs {self.table.shape[0]}"
            )

    def p_mis_k(self, weights: NDArray[np.float64], k: int) -> float:
        if k < 0:
            raise ValidationError(f"k must be non-negative, got {k}")
        self._check(weights)
        return float(weights[self.table & (self.sizes >= self.mis_size - k)].sum())

    def violation(self, weights: NDArray[np.float64]) -> float:
        self._check(weights)
        return float(weights[~self.table].sum())


def p_mis_k(ground: GroundSpace, g: AbstractGraph, k: int = 0) -> float:
    """Probability of measuring an independent set of size at least |MIS| − k.

    k = 0 is the MIS probability itself.
    """
    return IndependenceProfile.of(g).p_mis_k(ground.probabilities(), k)


def violation_weight(ground: GroundSpace, g: AbstractGraph) -> float:
    """Probability of measuring a set that is not independent in g."""
    return IndependenceProfile.of(g).violation(ground.probabilities())


def delta_k(p_local: float, p_global: float) -> float | None:
    """Relative sampling enhancement 2(p_l − p_g)/(p_l + p_g); None when both are zero."""
    if p_local < 0 or p_global < 0:
        raise ValidationError(f"probabilities must be non-negative, got {p_local} and {p_global}")
    total = p_local + p_global
    if total == 0:
        return None
    return 2.0 * (p_local - p_global) / total
