"""Constant-Hamiltonian quench evolution.

Two evolvers share one interface:

- `SpectralEvolver` diagonalizes H once and applies exp(-iΛt) phases per sampled time. This
  is what every experiment uses.
- `ReferenceEvolver` steps the Schrödinger equation with classic fixed-step RK4. It exists as
  an independent cross-check for the spectral path and is only used in tests.

Example usage:
    >>> traj = evolve(H, basis_state(2, 0), duration=50.0, dt=0.05)
    >>> p_max, t_max = max_expectation(H, basis_state(2, 0), projector(3, n_atoms=2), 50.0, 0.05)
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import linalg

from ..shared.config import DEFAULT_DT, IMAG_TOL, NORM_TOL, REFERENCE_DT, REFERENCE_NORM_DRIFT
from ..shared.error_handling import IntegrationError, NumericalError, ValidationError
from ..shared.log import get_logger
from .operators import HermitianOperator, QuantumState, as_operator, as_state

logger = get_logger(__name__)

# Sampled expectation values closer than this to the maximum count as ties
TIE_TOL = 1e-12

# Time samples evaluated per block when only expectation values are kept
_BLOCK = 512


def sample_times(duration: float, dt: float) -> NDArray[np.float64]:
    """Uniform grid 0, dt, 2dt, ... up to duration (inclusive when it lands on the grid)."""
    if not duration > 0:
        raise ValidationError(f"duration must be positive, got {duration}")
    if not dt > 0:
        raise ValidationError(f"dt must be positive, got {dt}")
    n = math.floor(duration / dt + 1e-9)
    return dt * np.arange(n + 1, dtype=np.float64)


@dataclass(frozen=True)
class QuenchTrajectory:
    """Sampled evolution under a constant Hamiltonian.

    Holds either full states (`states`, shape (n_times, dim)) or, in observable mode, one real
    expectation value per time (`values`).
    """

    times: NDArray[np.float64]
    states: NDArray[np.complex128] | None = None
    values: NDArray[np.float64] | None = None
    norm_tol: float = NORM_TOL

    def __post_init__(self) -> None:
        if self.times.size == 0 or self.times[0] != 0.0:
            raise ValidationError("trajectory times must start at 0")
        if np.any(np.diff(self.times) <= 0):
            raise ValidationError("trajectory times must be strictly increasing")
        if self.states is None and self.values is None:
            raise ValidationError("trajectory needs states or values")
        if self.states is not None:
            _check_norms(self.states, self.norm_tol)

    def __len__(self) -> int:
        return self.times.size

    def state(self, k: int) -> QuantumState:
        if self.states is None:
            raise ValidationError("trajectory holds observable values only")
        return QuantumState(self.states[k])

    def final_state(self) -> QuantumState:
        return self.state(-1)

    def expectation(self, observable: HermitianOperator | ArrayLike) -> NDArray[np.float64]:
        """Real expectation value of an observable at every stored time."""
        if self.states is None:
            raise ValidationError("trajectory holds observable values only")
        return _expectations(self.states, as_operator(observable))


def _check_norms(states: NDArray[np.complex128], tol: float = NORM_TOL) -> float:
    drift = float(np.max(np.abs(np.linalg.norm(states, axis=1) - 1.0)))
    if not drift <= tol:
        raise IntegrationError(f"norm drift {drift:.3e} exceeds {tol:.0e}")
    return drift


def _expectations(states: NDArray[np.complex128], observable: HermitianOperator) -> NDArray[np.float64]:
    if observable.is_diagonal:
        return (np.abs(states) ** 2) @ observable.diagonal()
    values = np.einsum("ti,ij,tj->t", states.conj(), observable.entries, states)
    scale = max(1.0, float(np.max(np.abs(observable.entries))))
    worst = float(np.max(np.abs(values.imag))) if values.size else 0.0
    if worst > IMAG_TOL * scale:
        raise NumericalError(f"expectation value has imaginary part {worst:.3e}")
    return values.real


def _check_pair(hamiltonian: HermitianOperator, psi0: QuantumState) -> None:
    hamiltonian._check_dimension(psi0.dimension)


class Evolver(ABC):
    """Propagates a state under a constant Hamiltonian to a set of sample times."""

    name: str = "evolver"
    norm_tol: float = NORM_TOL

    @abstractmethod
    def propagate(
        self, hamiltonian: HermitianOperator, psi0: QuantumState, times: NDArray[np.float64]
    ) -> NDArray[np.complex128]:
        """Return the states at each time as rows of a (len(times), dim) array."""
        ...

    def evolve(
        self,
        hamiltonian: HermitianOperator | ArrayLike,
        psi0: QuantumState | ArrayLike,
        duration: float,
        dt: float = DEFAULT_DT,
    ) -> QuenchTrajectory:
        """Sample the full trajectory on a uniform grid."""
        hamiltonian, psi0 = as_operator(hamiltonian), as_state(psi0)
        _check_pair(hamiltonian, psi0)
        times = sample_times(duration, dt)
        logger.debug("%s: dim=%d samples=%d", self.name, psi0.dimension, times.size)
        states = self.propagate(hamiltonian, psi0, times)
        return QuenchTrajectory(times=times, states=states, norm_tol=self.norm_tol)

    def expectation_series(
        self,
        hamiltonian: HermitianOperator | ArrayLike,
        psi0: QuantumState | ArrayLike,
        observable: HermitianOperator | ArrayLike,
        duration: float,
        dt: float = DEFAULT_DT,
    ) -> QuenchTrajectory:
        """Observable-mode trajectory: one expectation value per sampled time."""
        hamiltonian, psi0, observable = as_operator(hamiltonian), as_state(psi0), as_operator(observable)
        _check_pair(hamiltonian, psi0)
        observable._check_dimension(hamiltonian.dimension)
        times = sample_times(duration, dt)
        values = np.empty(times.size)
        for start in range(0, times.size, _BLOCK):
            block = times[start : start + _BLOCK]
            states = self.propagate(hamiltonian, psi0, block)
            _check_norms(states, self.norm_tol)
            values[start : start + block.size] = _expectations(states, observable)
        return QuenchTrajectory(times=times, values=values)


class SpectralEvolver(Evolver):
    """exp(-iHt)ψ0 through one eigendecomposition of H."""

    name = "spectral"

    def __init__(self) -> None:
        self._cache: tuple[NDArray[np.complex128], NDArray[np.float64], NDArray[np.complex128]] | None = None

    def decompose(self, hamiltonian: HermitianOperator) -> tuple[NDArray[np.float64], NDArray[np.complex128]]:
        # Blocked propagation asks for the same H repeatedly
        if self._cache is None or self._cache[0] is not hamiltonian.entries:
            energies, vectors = spectral_decomposition(hamiltonian)
            self._cache = (hamiltonian.entries, energies, vectors)
        return self._cache[1], self._cache[2]

    def propagate(
        self, hamiltonian: HermitianOperator, psi0: QuantumState, times: NDArray[np.float64]
    ) -> NDArray[np.complex128]:
        energies, vectors = self.decompose(hamiltonian)
        coeffs = vectors.conj().T @ psi0.amplitudes
        phases = np.exp(-1j * np.outer(times, energies))
        return (phases * coeffs) @ vectors.T


class ReferenceEvolver(Evolver):
    """Fixed-step RK4 integrator of i dψ/dt = Hψ.

    States are recorded at every step, so `dt` is also the integration step. A norm drift
    above 1e-6 anywhere in the run is reported as an IntegrationError.
    """

    name = "reference"

    def __init__(self, max_drift: float = REFERENCE_NORM_DRIFT) -> None:
        self.norm_tol = max_drift

    def propagate(
        self, hamiltonian: HermitianOperator, psi0: QuantumState, times: NDArray[np.float64]
    ) -> NDArray[np.complex128]:
        steps = np.diff(times)
        if steps.size and not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
            raise ValidationError("reference integration needs a uniform time grid")
        states = np.empty((times.size, psi0.dimension), dtype=np.complex128)
        states[0] = psi0.amplitudes
        if steps.size:
            # One RK4 step for a linear ODE is the degree-4 Taylor polynomial of exp(-iH dt)
            a = -1j * steps[0] * hamiltonian.entries
            step = np.eye(psi0.dimension, dtype=np.complex128)
            term = step.copy()
            for k in range(1, 5):
                term = term @ a / k
                step = step + term
            psi = psi0.amplitudes.copy()
            for k in range(1, times.size):
                psi = step @ psi
                states[k] = psi
        _check_norms(states, self.norm_tol)
        return states

    def evolve(self, hamiltonian, psi0, duration, dt=REFERENCE_DT):  # type: ignore[override]
        return super().evolve(hamiltonian, psi0, duration, dt)

    def expectation_series(self, hamiltonian, psi0, observable, duration, dt=REFERENCE_DT):  # type: ignore[override]
        # Blocks would restart the integration from psi0, so run the whole trajectory at once
        traj = self.evolve(hamiltonian, psi0, duration, dt)
        return QuenchTrajectory(times=traj.times, values=traj.expectation(observable))


_EVOLVERS: dict[str, type[Evolver]] = {
    SpectralEvolver.name: SpectralEvolver,
    ReferenceEvolver.name: ReferenceEvolver,
}


def get_evolver(name: str | None = None) -> Evolver:
    """Factory - returns an Evolver instance, spectral by default."""
    key = (name or SpectralEvolver.name).lower()
    if key not in _EVOLVERS:
        raise ValidationError(f"Unknown evolver '{name}'. Choose from: {', '.join(sorted(_EVOLVERS))}")
    return _EVOLVERS[key]()


def spectral_decomposition(hamiltonian: HermitianOperator | ArrayLike) -> tuple[NDArray[np.float64], NDArray[np.complex128]]:
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns) of H."""
    energies, vectors = linalg.eigh(as_operator(hamiltonian).entries)
    return energies, vectors


def evolve(
    hamiltonian: HermitianOperator | ArrayLike,
    psi0: QuantumState | ArrayLike,
    duration: float,
    dt: float = DEFAULT_DT,
) -> QuenchTrajectory:
    """Spectral evolution sampled every dt from 0 to duration."""
    return SpectralEvolver().evolve(hamiltonian, psi0, duration, dt)


def evolve_reference(
    hamiltonian: HermitianOperator | ArrayLike,
    psi0: QuantumState | ArrayLike,
    duration: float,
    dt_fine: float = REFERENCE_DT,
) -> QuenchTrajectory:
    """RK4 evolution with step dt_fine, for cross-checking `evolve`."""
    return ReferenceEvolver().evolve(hamiltonian, psi0, duration, dt_fine)


def expectation_series(
    hamiltonian: HermitianOperator | ArrayLike,
    psi0: QuantumState | ArrayLike,
    observable: HermitianOperator | ArrayLike,
    duration: float,
    dt: float = DEFAULT_DT,
    evolver: Evolver | None = None,
) -> QuenchTrajectory:
    return (evolver or SpectralEvolver()).expectation_series(hamiltonian, psi0, observable, duration, dt)


def max_expectation(
    hamiltonian: HermitianOperator | ArrayLike,
    psi0: QuantumState | ArrayLike,
    observable: HermitianOperator | ArrayLike,
    duration: float,
    dt: float = DEFAULT_DT,
    evolver: Evolver | None = None,
) -> tuple[float, float]:
    """Maximum over the sampled grid of ⟨ψ(t)|O|ψ(t)⟩.

    Args:
        hamiltonian: Constant Hamiltonian
        psi0: Initial state
        observable: Hermitian observable of the same dimension
        duration: Quench length in µs
        dt: Sampling step in µs
        evolver: Evolution backend (spectral by default)

    Returns:
        (max_value, argmax_time); ties go to the earliest time
    """
    traj = expectation_series(hamiltonian, psi0, observable, duration, dt, evolver)
    values = traj.values
    assert values is not None
    k = int(np.flatnonzero(values >= values.max() - TIE_TOL)[0])
    return float(values[k]), float(traj.times[k])
