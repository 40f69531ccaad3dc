"""State vectors and Hermitian operators over the atom basis.

Basis ordering is little-endian in atom index: bit i of a basis index is the occupation of atom
i, and a set bit means the atom is in |R⟩. For two atoms the basis is |gg⟩, |Rg⟩, |gR⟩, |RR⟩
where the left label is atom 0.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import cached_property

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..shared.config import HERMITIAN_TOL, NORM_TOL
from ..shared.error_handling import DimensionMismatchError, NonHermitianError, ValidationError


def _atoms_for_dimension(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim < 1 or 1 << n != dim:
        raise DimensionMismatchError(f"dimension {dim} is not a power of two")
    return n


class QuantumState:
    """Normalized amplitude vector over 2^n_atoms basis states."""

    __slots__ = ("amplitudes", "n_atoms")

    def __init__(self, amplitudes: ArrayLike) -> None:
        vec = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        self.n_atoms = _atoms_for_dimension(vec.size)
        norm = float(np.linalg.norm(vec))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(f"state norm is {norm:.12g}, expected 1")
        vec.setflags(write=False)
        self.amplitudes: NDArray[np.complex128] = vec

    @property
    def dimension(self) -> int:
        return self.amplitudes.size

    def probabilities(self) -> NDArray[np.float64]:
        return np.abs(self.amplitudes) ** 2

    def overlap(self, other: QuantumState) -> complex:
        """⟨self|other⟩."""
        if other.dimension != self.dimension:
            raise DimensionMismatchError(f"dimensions differ: {self.dimension} vs {other.dimension}")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def __repr__(self) -> str:
        return f"QuantumState(n_atoms={self.n_atoms})"


class HermitianOperator:
    """Dense Hermitian matrix.

    Construction checks that the entries equal their conjugate transpose elementwise within
    an absolute 1e-12.
    """

    def __init__(self, entries: ArrayLike) -> None:
        mat = np.array(entries, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DimensionMismatchError(f"operator must be a square matrix, got shape {mat.shape}")
        asym = float(np.max(np.abs(mat - mat.conj().T))) if mat.size else 0.0
        if asym > HERMITIAN_TOL:
            raise NonHermitianError(f"operator is not Hermitian (max |H - H^†| = {asym:.3e})")
        mat.setflags(write=False)
        self.entries: NDArray[np.complex128] = mat

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    @property
    def n_atoms(self) -> int:
        return _atoms_for_dimension(self.dimension)

    @cached_property
    def is_diagonal(self) -> bool:
        off = self.entries - np.diag(np.diag(self.entries))
        return not np.any(off)

    def diagonal(self) -> NDArray[np.float64]:
        return np.diag(self.entries).real.copy()

    def expectation(self, state: QuantumState) -> complex:
        self._check_dimension(state.dimension)
        return complex(np.vdot(state.amplitudes, self.entries @ state.amplitudes))

    def _check_dimension(self, dim: int) -> None:
        if dim != self.dimension:
            raise DimensionMismatchError(f"operator dimension {self.dimension} does not match {dim}")

    def __repr__(self) -> str:
        return f"HermitianOperator(dimension={self.dimension}, diagonal={self.is_diagonal})"


def as_operator(value: HermitianOperator | ArrayLike) -> HermitianOperator:
    """Accept an operator or anything numpy can turn into a square matrix."""
    return value if isinstance(value, HermitianOperator) else HermitianOperator(value)


def as_state(value: QuantumState | ArrayLike) -> QuantumState:
    return value if isinstance(value, QuantumState) else QuantumState(value)


def diagonal_operator(values: ArrayLike) -> HermitianOperator:
    """Operator with the given real diagonal."""
    return HermitianOperator(np.diag(np.asarray(values, dtype=np.float64)))


def occupations(n_atoms: int) -> NDArray[np.int8]:
    """Occupation table: row = basis index, column = atom, entry 1 for |R⟩."""
    idx = np.arange(1 << n_atoms)
    return ((idx[:, None] >> np.arange(n_atoms)) & 1).astype(np.int8)


def basis_index(bits: Sequence[int]) -> int:
    """Basis index of an occupation pattern, bits[i] is atom i."""
    return sum(1 << i for i, b in enumerate(bits) if b)


def basis_state(n_atoms: int, index: int | Sequence[int] = 0) -> QuantumState:
    """Computational basis state, given as a basis index or an occupation pattern.

    Args:
        n_atoms: Number of atoms
        index: Basis index, or a sequence of 0/1 occupations (one per atom)

    Returns:
        The basis state
    """
    if not isinstance(index, int | np.integer):
        if len(index) != n_atoms:
            raise DimensionMismatchError(f"occupation pattern has {len(index)} entries for {n_atoms} atoms")
        index = basis_index(index)
    dim = 1 << n_atoms
    if not 0 <= index < dim:
        raise ValidationError(f"basis index {index} out of range for {n_atoms} atoms")
    vec = np.zeros(dim, dtype=np.complex128)
    vec[index] = 1.0
    return QuantumState(vec)


def number_operator(n_atoms: int, atom: int) -> HermitianOperator:
    """n_i = |R⟩⟨R| on one atom."""
    if not 0 <= atom < n_atoms:
        raise ValidationError(f"atom {atom} out of range for {n_atoms} atoms")
    return diagonal_operator(occupations(n_atoms)[:, atom])


def pair_number_operator(n_atoms: int, i: int, j: int) -> HermitianOperator:
    """n_i n_j."""
    if not (0 <= i < n_atoms and 0 <= j < n_atoms):
        raise ValidationError(f"atoms ({i}, {j}) out of range for {n_atoms} atoms")
    occ = occupations(n_atoms)
    return diagonal_operator(occ[:, i] * occ[:, j])


def projector(state: QuantumState | int, n_atoms: int | None = None) -> HermitianOperator:
    """|ψ⟩⟨ψ| for a state, or for a basis index when n_atoms is given."""
    if isinstance(state, QuantumState):
        vec = state.amplitudes
        return HermitianOperator(np.outer(vec, vec.conj()))
    if n_atoms is None:
        raise ValidationError("n_atoms is required when projecting onto a basis index")
    if not 0 <= state < 1 << n_atoms:
        raise ValidationError(f"basis index {state} out of range for {n_atoms} atoms")
    values = np.zeros(1 << n_atoms)
    values[state] = 1.0
    return diagonal_operator(values)


def identity(n_atoms: int) -> HermitianOperator:
    return diagonal_operator(np.ones(1 << n_atoms))
