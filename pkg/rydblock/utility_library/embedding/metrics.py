"""Quench metrics for judging how well a register embeds a graph.

Both metrics are maxima over the sampled quench from the all-ground state:

- the violation probability, max_t ⟨Π⟩ with Π the projector onto basis states that are not
  independent sets of the target graph;
- the correlation matrix, C_ij = max_t ⟨n_i n_j⟩ with each pair maximized on its own, and
  max_t ⟨n_i⟩ on the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ..graphs.disk_graph import AbstractGraph
from ..graphs.independence import independent_table
from ..quantum_core.evolution import SpectralEvolver, max_expectation, sample_times
from ..quantum_core.operators import HermitianOperator, basis_state, diagonal_operator, occupations
from ..rydberg_model.hamiltonian import build_hamiltonian
from ..rydberg_model.register import AtomRegister
from ..shared.config import DEFAULT_DT, EMBED_DURATION
from ..shared.error_handling import DimensionMismatchError
from ..shared.log import get_logger

logger = get_logger(__name__)

# Sampled times propagated together
_TIME_BLOCK = 256


def non_independence_projector(g: AbstractGraph, n_atoms: int) -> HermitianOperator:
    """Diagonal 0/1 operator: 1 on every basis state that is not an independent set of g."""
    if g.n != n_atoms:
        raise DimensionMismatchError(f"graph has {g.n} vertices but the register has {n_atoms} atoms")
    return diagonal_operator((~independent_table(g)).astype(np.float64))


def violation_probability(
    reg: AtomRegister,
    g: AbstractGraph,
    duration: float = EMBED_DURATION,
    dt: float = DEFAULT_DT,
) -> float:
    """Largest probability of leaving the independent-set subspace during the quench."""
    projector = non_independence_projector(g, reg.n_atoms)
    value, _ = max_expectation(build_hamiltonian(reg), basis_state(reg.n_atoms, 0), projector, duration, dt)
    return value


@dataclass(frozen=True)
class QuenchMaxima:
    violation: float
    correlation: NDArray[np.float64]


def quench_maxima(
    reg: AtomRegister,
    g: AbstractGraph | None,
    duration: float = EMBED_DURATION,
    dt: float = DEFAULT_DT,
) -> QuenchMaxima:
    """Violation probability and correlation matrix from one evolution.

    With g None the violation is reported as 0.
    """
    n = reg.n_atoms
    diag = non_independence_projector(g, n).diagonal() if g is not None else np.zeros(1 << n)
    occ = occupations(n).astype(np.float64)
    h = build_hamiltonian(reg)
    psi0 = basis_state(n, 0)
    evolver = SpectralEvolver()
    times = sample_times(duration, dt)
    violation = 0.0
    corr = np.zeros((n, n))
    for start in range(0, times.size, _TIME_BLOCK):
        states = evolver.propagate(h, psi0, times[start : start + _TIME_BLOCK])
        probs = np.abs(states) ** 2
        violation = max(violation, float(np.max(probs @ diag)))
        for i in range(n):
            # ⟨n_i n_j⟩ for every j at every sampled time
            pair = (probs * occ[:, i]) @ occ
            corr[i] = np.maximum(corr[i], pair.max(axis=0))
    logger.debug("quench maxima for %d atoms over %d samples: violation %.4f", n, times.size, violation)
    return QuenchMaxima(violation, np.clip(corr, 0.0, 1.0))


def correlation_matrix(
    reg: AtomRegister,
    duration: float = EMBED_DURATION,
    dt: float = DEFAULT_DT,
) -> NDArray[np.float64]:
    """C_ij = max_t ⟨n_i n_j⟩; symmetric, entries in [0, 1]."""
    return quench_maxima(reg, None, duration, dt).correlation
