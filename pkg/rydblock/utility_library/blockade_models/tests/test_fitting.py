"""Tests for the local-gradient fit."""

import numpy as np
import pytest

from rydblock.utility_library.blockade_models.closed_form import (
    omega_eff,
    prr_local,
    prr_sequential,
    rb_local,
    rb_pi,
)
from rydblock.utility_library.blockade_models.fitting import (
    FitSample,
    fit_gradient_slope,
    fit_local_gradient,
    fit_sweep_combinations,
    fluctuability,
    mapped_sequential_prr,
)
from rydblock.utility_library.blockade_models.simulation import DriveScenario, prr_long_time, scan_prr
from rydblock.utility_library.shared.error_handling import ValidationError

R_GRID = np.linspace(5.0, 24.75, 80)


class TestFluctuability:
    def test_increasing_series(self):
        assert np.all(fluctuability(np.linspace(0.0, 1.0, 12)) == 0)

    def test_constant_series(self):
        assert np.all(fluctuability(np.full(7, 0.4)) == 0)

    def test_hand_example(self):
        weights = fluctuability([0.1, 0.3, 0.2, 0.5, 0.6])
        assert weights[2] == pytest.approx(0.1 / 0.7)

    def test_window_clipped_at_ends(self):
        weights = fluctuability([0.1, 0.3, 0.2, 0.5, 0.6])
        # index 0 sees steps +0.2, −0.1
        assert weights[0] == pytest.approx(0.1 / 0.3)

    def test_capped_below_one(self):
        weights = fluctuability([1.0, 0.5, 0.2, 0.1, 0.0])
        assert np.all(weights == 0.99)

    def test_rejects_short_series(self):
        with pytest.raises(ValidationError):
            fluctuability([0.1, 0.2])


class TestFitSample:
    def test_computes_fluctuability(self):
        sample = FitSample(1.0, 2.0, [5.0, 6.0, 7.0], [0.1, 0.3, 0.2])
        assert sample.fluctuability.shape == (3,)
        assert sample.fluctuability[1] > 0

    def test_rejects_unsorted_r(self):
        with pytest.raises(ValidationError):
            FitSample(1.0, 2.0, [5.0, 7.0, 6.0], [0.1, 0.2, 0.3])

    def test_rejects_probability_out_of_range(self):
        with pytest.raises(ValidationError):
            FitSample(1.0, 2.0, [5.0, 6.0, 7.0], [0.1, 0.2, 1.3])

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValidationError):
            FitSample(1.0, 2.0, [5.0, 6.0, 7.0], [0.1, 0.2])

    def test_rejects_bad_weights(self):
        with pytest.raises(ValidationError):
            FitSample(1.0, 2.0, [5.0, 6.0, 7.0], [0.1, 0.2, 0.3], fluctuability=np.ones(3))

    def test_omega_eff(self):
        assert FitSample(1.0, 3.0, [5.0, 6.0, 7.0], [0.1, 0.2, 0.3]).omega_eff == pytest.approx(omega_eff(1.0, 3.0))


class TestMappedSequentialPrr:
    def test_half_at_local_radius(self):
        omega = omega_eff(2.0, 1.2)
        rbp, rbl = rb_pi(omega), rb_local(2.0, 1.2)
        value = mapped_sequential_prr(np.array([rbl]), 3.475 / rbp, rbp, rbl, omega)
        assert value[0] == pytest.approx(0.5)

    def test_sequential_gradient_is_identity_map(self):
        omega = 1.5
        rbp = rb_pi(omega)
        values = mapped_sequential_prr(R_GRID, 3.0 / rbp, rbp, rbp, omega)
        assert np.allclose(values, prr_sequential(R_GRID, omega))

    def test_zero_where_map_is_not_positive(self):
        rbp = rb_pi(1.0)
        values = mapped_sequential_prr(np.array([1.0, 20.0]), 9.0 / rbp, rbp, 15.0, 1.0)
        assert values[0] == 0.0


class TestFitLocalGradient:
    @pytest.mark.parametrize("omega0,omega1,scaled", [(2.0, 1.2, 3.475), (1.0, 1.0, 3.864), (4.0, 2.0, 3.2)])
    def test_recovers_synthetic_gradient(self, omega0, omega1, scaled):
        omega = omega_eff(omega0, omega1)
        rbp, rbl = rb_pi(omega), rb_local(omega0, omega1)
        prr = mapped_sequential_prr(R_GRID, scaled / rbp, rbp, rbl, omega)
        fit = fit_local_gradient(FitSample(omega0, omega1, R_GRID, prr))
        assert fit.scaled_gradient == pytest.approx(scaled, rel=0.01)
        assert fit.quality_ok
        assert fit.rb_local == pytest.approx(rbl)

    def test_requires_straddling_grid(self):
        r = np.linspace(15.0, 25.0, 20)
        with pytest.raises(ValidationError, match="straddle"):
            fit_local_gradient(FitSample(2.0, 2.0, r, prr_sequential(r, 2.0)))

    def test_global_regime_gradient(self):
        scenario = DriveScenario.local(1.0, 1.0)
        prr = np.array([prr_long_time(scenario, float(r)) for r in R_GRID])
        fit = fit_local_gradient(FitSample(1.0, 1.0, R_GRID, prr))
        assert 3.5 <= fit.scaled_gradient <= 4.2


def _long_time_curve(omega0, omega1):
    scenario = DriveScenario.local(omega0, omega1)
    return np.array([prr_long_time(scenario, float(r)) for r in R_GRID])


class TestLocalFormula:
    def test_residual_at_reference_amplitudes(self):
        residual = np.abs(_long_time_curve(1.5, 0.9) - prr_local(R_GRID, 1.5, 0.9))
        assert np.max(residual) <= 0.02

    @pytest.mark.parametrize("omega0,omega1", fit_sweep_combinations(20))
    def test_residual_across_sweep(self, omega0, omega1):
        residual = np.abs(_long_time_curve(omega0, omega1) - prr_local(R_GRID, omega0, omega1))
        assert np.max(residual) <= 0.05

    @pytest.mark.acceptance
    def test_short_quench_undershoots(self):
        scenario = DriveScenario.local(1.5, 0.9)
        bound = _long_time_curve(1.5, 0.9)
        short = scan_prr(scenario, R_GRID, duration=15.0)
        longer = scan_prr(scenario, R_GRID, duration=50.0)
        assert np.all(short <= longer + 1e-12)
        assert np.all(longer <= bound + 1e-9)
        assert np.max(bound - longer) <= np.max(bound - short)


class TestSweepCombinations:
    def test_count_and_ranges(self):
        combos = fit_sweep_combinations(61)
        assert len(combos) == 61
        for omega0, omega1 in combos:
            assert 1.0 <= omega0 <= 5.0
            assert 0.4 <= omega1 / omega0 <= 1.0

    def test_deterministic(self):
        assert fit_sweep_combinations(20) == fit_sweep_combinations(20)

    def test_prefix_stable(self):
        assert fit_sweep_combinations(61)[:10] == fit_sweep_combinations(10)

    def test_first_point(self):
        omega0, omega1 = fit_sweep_combinations(1)[0]
        assert omega0 == pytest.approx(3.0)
        assert omega1 == pytest.approx(1.8)

    def test_rejects_zero(self):
        with pytest.raises(ValidationError):
            fit_sweep_combinations(0)


class TestFitGradientSlope:
    def test_exact_line(self):
        x = np.linspace(0.05, 0.15, 20)
        assert fit_gradient_slope(x, 3.475 * x) == pytest.approx(3.475)

    def test_robust_to_single_outlier(self):
        x = np.linspace(0.05, 0.15, 21)
        g = 3.475 * x
        g[4] = 50.0
        assert fit_gradient_slope(x, g) == pytest.approx(3.475)

    def test_zero_weight_ignored(self):
        x = np.array([0.1, 0.1, 0.1])
        g = np.array([0.3, 0.35, 5.0])
        assert fit_gradient_slope(x, g, [1.0, 0.0, 0.0]) == pytest.approx(3.0)

    def test_rejects_non_positive_x(self):
        with pytest.raises(ValidationError):
            fit_gradient_slope([0.0, 0.1], [0.1, 0.3])

    def test_rejects_all_zero_weights(self):
        with pytest.raises(ValidationError):
            fit_gradient_slope([0.1, 0.2], [0.3, 0.6], [0.0, 0.0])
