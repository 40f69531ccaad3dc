"""Tests for quantum_core.operators."""

import numpy as np
import pytest

from rydblock.utility_library.quantum_core.operators import (
    HermitianOperator,
    QuantumState,
    basis_index,
    basis_state,
    identity,
    number_operator,
    occupations,
    pair_number_operator,
    projector,
)
from rydblock.utility_library.shared.error_handling import (
    DimensionMismatchError,
    NonHermitianError,
    ValidationError,
)


def test_basis_ordering_is_little_endian():
    """Atom 0 is the lowest bit of the basis index."""
    occ = occupations(2)
    assert occ.tolist() == [[0, 0], [1, 0], [0, 1], [1, 1]]
    assert basis_index([1, 0]) == 1
    assert basis_index([0, 1]) == 2
    assert basis_index([1, 1, 0]) == 3


def test_basis_state_from_pattern_matches_index():
    assert np.array_equal(basis_state(3, [0, 1, 1]).amplitudes, basis_state(3, 6).amplitudes)


def test_state_rejects_unnormalized_vector():
    with pytest.raises(ValidationError):
        QuantumState([1.0, 1.0])


def test_state_rejects_non_power_of_two_length():
    with pytest.raises(DimensionMismatchError):
        QuantumState([1.0, 0.0, 0.0])


def test_state_accepts_norm_within_tolerance():
    state = QuantumState([1.0 + 1e-10, 0.0])
    assert state.n_atoms == 1


def test_operator_rejects_non_hermitian():
    with pytest.raises(NonHermitianError):
        HermitianOperator([[0.0, 1.0], [0.0, 0.0]])


def test_operator_rejects_non_square():
    with pytest.raises(DimensionMismatchError):
        HermitianOperator(np.zeros((2, 3)))


def test_operator_tolerates_rounding_asymmetry():
    op = HermitianOperator([[0.0, 1.0 + 1e-13], [1.0, 0.0]])
    assert op.dimension == 2


def test_is_diagonal():
    assert number_operator(2, 0).is_diagonal
    assert not HermitianOperator([[0.0, 1.0], [1.0, 0.0]]).is_diagonal


def test_number_operators():
    """n_0 on two atoms is diag(0, 1, 0, 1); n_0 n_1 picks |RR⟩."""
    assert number_operator(2, 0).diagonal().tolist() == [0, 1, 0, 1]
    assert number_operator(2, 1).diagonal().tolist() == [0, 0, 1, 1]
    assert pair_number_operator(2, 0, 1).diagonal().tolist() == [0, 0, 0, 1]


def test_projector_on_basis_index_and_state():
    by_index = projector(3, n_atoms=2)
    by_state = projector(basis_state(2, 3))
    assert np.allclose(by_index.entries, by_state.entries)


def test_projector_requires_atom_count_for_index():
    with pytest.raises(ValidationError):
        projector(1)


def test_expectation_of_identity_is_one():
    state = QuantumState(np.full(4, 0.5))
    assert identity(2).expectation(state) == pytest.approx(1.0)


def test_expectation_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        identity(3).expectation(basis_state(2))


def test_entries_are_read_only():
    op = identity(1)
    with pytest.raises(ValueError):
        op.entries[0, 0] = 2.0
