"""Tests for the exact global-drive four-level model."""

import numpy as np
import pytest

from rydblock.utility_library.blockade_models.four_level import (
    FourLevelParams,
    ground_to_double_weights,
    prr_global_exact,
    symmetric_block_eigenvalues,
)
from rydblock.utility_library.blockade_models.simulation import DriveScenario, simulate_prr
from rydblock.utility_library.shared.config import C6_N70
from rydblock.utility_library.shared.error_handling import BlockadePoleError, ValidationError


def closed_form_spectrum(params: FourLevelParams) -> np.ndarray:
    return np.sort([params.a, *symmetric_block_eigenvalues(params)])


class TestFourLevelParams:
    def test_from_drive(self):
        params = FourLevelParams.from_drive(10.0, 1.0, 0.25)
        assert params.a == -0.25
        assert params.b == 0.5
        assert params.c == pytest.approx(0.862 - 0.5)

    def test_rejects_non_finite(self):
        with pytest.raises(ValidationError):
            FourLevelParams(a=float("nan"), b=1.0, c=0.0)

    def test_antisymmetric_state_has_energy_a(self):
        params = FourLevelParams(a=-1.0, b=0.5, c=3.0)
        v = np.array([0.0, -1.0, 1.0, 0.0])
        assert np.allclose(params.matrix() @ v, params.a * v)


class TestSymmetricBlockEigenvalues:
    def test_diagonal_limit(self):
        energies = symmetric_block_eigenvalues(FourLevelParams(a=2.0, b=1e-9, c=5.0))
        assert np.allclose(energies, [0.0, 2.0, 5.0], atol=1e-8)

    @pytest.mark.parametrize(
        "params",
        [
            FourLevelParams(a=-1.0, b=0.5, c=3.0),
            FourLevelParams.from_drive(10.0, 1.0),
            FourLevelParams(a=0.0, b=2.0, c=0.0),
            FourLevelParams(a=3.0, b=0.1, c=-4.0),
        ],
    )
    def test_matches_numerical_spectrum(self, params):
        expected = np.linalg.eigvalsh(params.matrix())
        assert np.allclose(closed_form_spectrum(params), expected, rtol=0, atol=1e-8)

    def test_ascending(self):
        e2, e3, e4 = symmetric_block_eigenvalues(FourLevelParams(a=-1.0, b=0.5, c=3.0))
        assert e2 <= e3 <= e4

    def test_random_draws(self):
        rng = np.random.default_rng(20240611)
        for _ in range(1000):
            params = FourLevelParams(
                a=rng.uniform(-10, 10), b=rng.uniform(1e-6, 10), c=rng.uniform(-10, 10)
            )
            expected = np.linalg.eigvalsh(params.matrix())
            got = closed_form_spectrum(params)
            assert np.all(np.abs(got - expected) <= 1e-8 * np.maximum(1.0, np.abs(expected)))


class TestGroundToDoubleWeights:
    def test_matches_eigenvectors(self):
        params = FourLevelParams.from_drive(8.0, 1.0)
        values, vectors = np.linalg.eigh(params.matrix())
        numerical = sorted(vectors[0, k] * vectors[3, k] for k in range(4) if abs(values[k] - params.a) > 1e-9)
        assert np.allclose(sorted(ground_to_double_weights(params)), numerical, atol=1e-10)

    def test_weights_sum_to_zero_overlap(self):
        """⟨gg|RR⟩ = 0 = Σ_i ⟨gg|v_i⟩⟨v_i|RR⟩."""
        weights = ground_to_double_weights(FourLevelParams.from_drive(9.0, 2.0))
        assert weights.sum() == pytest.approx(0.0, abs=1e-12)

    def test_pole_at_zero_interaction(self):
        with pytest.raises(BlockadePoleError):
            ground_to_double_weights(FourLevelParams(a=1.0, b=0.5, c=0.0))

    def test_requires_drive(self):
        with pytest.raises(ValidationError):
            ground_to_double_weights(FourLevelParams(a=1.0, b=0.0, c=2.0))


class TestPrrGlobalExact:
    @pytest.mark.parametrize("r", [6.0, 8.0, 10.0, 12.0])
    def test_upper_bounds_simulation(self, r):
        simulated = simulate_prr(DriveScenario.global_drive(1.0), r, duration=50.0)
        assert prr_global_exact(r, 1.0) >= simulated - 1e-9

    @pytest.mark.parametrize("r", [12.0, 14.0, 20.0])
    def test_weak_interaction_limit(self, r):
        assert prr_global_exact(r, 3.0) >= 0.95

    def test_probability_grid(self):
        for r in np.linspace(4.0, 20.0, 10):
            for omega in np.linspace(0.5, 5.0, 10):
                value = prr_global_exact(float(r), float(omega))
                assert 0.0 <= value <= 1.0 + 1e-12

    def test_deep_blockade_is_small(self):
        assert prr_global_exact(4.0, 1.0) < 0.01

    def test_pole_is_stepped_over(self):
        delta = 1.0
        r = (C6_N70 / (2 * delta)) ** (1 / 6)
        value = prr_global_exact(r, 1.0, delta)
        assert 0.0 <= value <= 1.0 + 1e-6

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValidationError):
            prr_global_exact(0.0, 1.0)
        with pytest.raises(ValidationError):
            prr_global_exact(8.0, 0.0)
