"""Rydberg model module.

Physical constants, atom registers and the register Hamiltonian.
"""

from .hamiltonian import build_hamiltonian, hamiltonian_diagonal
from .register import (
    AtomRegister,
    PhysicalConstants,
    interaction_matrix,
    load_register,
    save_register,
    scale_register,
)

__all__ = [
    "AtomRegister",
    "PhysicalConstants",
    "build_hamiltonian",
    "hamiltonian_diagonal",
    "interaction_matrix",
    "load_register",
    "save_register",
    "scale_register",
]
