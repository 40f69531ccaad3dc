"""MIS optimization module.

Ground states of final Hamiltonians under local and global finite drives, the MIS probability
ladder, (κ, δ_f) optimization and the local/global enhancement Δ_k.
"""

from .ground_state import (
    DriveMode,
    FinalDriveParams,
    GroundSpace,
    delta_k,
    final_hamiltonian,
    ground_space,
    p_mis_k,
    violation_weight,
)
from .optimize import MISReport, ModeComparison, compare_modes, mis_report, optimize_drive

__all__ = [
    "DriveMode",
    "FinalDriveParams",
    "GroundSpace",
    "MISReport",
    "ModeComparison",
    "compare_modes",
    "delta_k",
    "final_hamiltonian",
    "ground_space",
    "mis_report",
    "optimize_drive",
    "p_mis_k",
    "violation_weight",
]
