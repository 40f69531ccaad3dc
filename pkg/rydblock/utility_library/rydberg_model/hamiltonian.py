"""Rydberg Hamiltonian of an atom register.

    H = ½ Σ_i Ω_i σ_i^x − Σ_i δ_i n_i + Σ_{i<j} C6/r_ij⁶ n_i n_j

in the little-endian basis of `quantum_core.operators`.
"""

import numpy as np

from ..quantum_core.operators import HermitianOperator, occupations
from ..shared.config import MAX_DENSE_ATOMS
from ..shared.error_handling import ValidationError
from ..shared.log import get_logger
from .register import AtomRegister, interaction_matrix

logger = get_logger(__name__)


def hamiltonian_diagonal(reg: AtomRegister) -> np.ndarray:
    """Diagonal of H: detuning and interaction energy of every basis state."""
    occ = occupations(reg.n_atoms).astype(np.float64)
    v = interaction_matrix(reg)
    # v is symmetric with a zero diagonal, so the full quadratic form counts each pair twice
    return -occ @ reg.deltas + 0.5 * np.einsum("bi,ij,bj->b", occ, v, occ)


def build_hamiltonian(reg: AtomRegister) -> HermitianOperator:
    """Dense Hamiltonian of the register.

    Args:
        reg: Atom register (positions, amplitudes, detunings, C6)

    Returns:
        Real symmetric Hamiltonian as a HermitianOperator
    """
    n = reg.n_atoms
    if n > MAX_DENSE_ATOMS:
        raise ValidationError(f"{n} atoms exceeds the dense limit of {MAX_DENSE_ATOMS}")
    dim = 1 << n
    idx = np.arange(dim)
    h = np.zeros((dim, dim), dtype=np.float64)
    for i, omega in enumerate(reg.omegas):
        if omega:
            h[idx ^ (1 << i), idx] += 0.5 * omega
    h[idx, idx] = hamiltonian_diagonal(reg)
    logger.debug("built Hamiltonian for %d atoms (dim %d)", n, dim)
    return HermitianOperator(h)
