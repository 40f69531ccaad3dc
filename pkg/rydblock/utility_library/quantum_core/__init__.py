"""Quantum core module.

State vectors, Hermitian operators and constant-Hamiltonian quench evolution.
"""

from .evolution import (
    Evolver,
    QuenchTrajectory,
    ReferenceEvolver,
    SpectralEvolver,
    evolve,
    evolve_reference,
    expectation_series,
    get_evolver,
    max_expectation,
    sample_times,
    spectral_decomposition,
)
from .operators import (
    HermitianOperator,
    QuantumState,
    basis_index,
    basis_state,
    diagonal_operator,
    identity,
    number_operator,
    occupations,
    pair_number_operator,
    projector,
)

__all__ = [
    "Evolver",
    "HermitianOperator",
    "QuantumState",
    "QuenchTrajectory",
    "ReferenceEvolver",
    "SpectralEvolver",
    "basis_index",
    "basis_state",
    "diagonal_operator",
    "evolve",
    "evolve_reference",
    "expectation_series",
    "get_evolver",
    "identity",
    "max_expectation",
    "number_operator",
    "occupations",
    "pair_number_operator",
    "projector",
    "sample_times",
    "spectral_decomposition",
]
