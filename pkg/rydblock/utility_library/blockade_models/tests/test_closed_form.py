"""Tests for the closed-form blockade models."""

import math

import numpy as np
import pytest

from rydblock.utility_library.blockade_models.closed_form import (
    omega_eff,
    omega_for_global_radius,
    omega_for_sequential_radius,
    prr_global_simplified,
    prr_local,
    prr_sequential,
    rb_global,
    rb_local,
    rb_pi,
    rb_sequential,
)
from rydblock.utility_library.shared.config import C6_N70, C6_N82
from rydblock.utility_library.shared.error_handling import ValidationError


class TestRadii:
    def test_sequential_at_pi(self):
        assert rb_sequential(math.pi) == pytest.approx(8.061, abs=1e-3)

    def test_sequential_unit_ratio(self):
        assert rb_sequential(C6_N70) == pytest.approx(1.0)

    def test_sequential_at_pi_over_20(self):
        assert rb_sequential(math.pi / 20) == pytest.approx(13.282, abs=2e-3)

    def test_sequential_includes_detuning(self):
        assert rb_sequential(1.0, 0.5) == pytest.approx((C6_N70 / 1.5) ** (1 / 6))

    @pytest.mark.parametrize("omega,delta", [(1.0, -1.0), (0.5, -2.0)])
    def test_sequential_rejects_non_positive_sum(self, omega, delta):
        with pytest.raises(ValidationError):
            rb_sequential(omega, delta)

    def test_global_constants(self):
        """Both reference radii within 0.2% of 7.9055 and 13.0247 µm."""
        assert 7.885 <= rb_global(math.pi) <= 7.925
        assert 12.99 <= rb_global(math.pi / 20) <= 13.05

    def test_global_at_three(self):
        assert rb_global(3.0) == pytest.approx(7.958, rel=1e-3)

    @pytest.mark.parametrize("omega", [0.3, 1.0, math.pi, 7.5])
    def test_global_is_98_percent_of_sequential(self, omega):
        assert rb_global(omega) / rb_sequential(omega) == pytest.approx(0.98)

    def test_n82_preset_widens_radius(self):
        assert rb_global(1.0, C6_N82) > rb_global(1.0, C6_N70)

    def test_rb_pi_rejects_zero(self):
        with pytest.raises(ValidationError):
            rb_pi(0.0)


class TestLocalDrive:
    def test_omega_eff_example(self):
        assert omega_eff(1.0, 3.0) == pytest.approx(1.689, abs=1e-3)

    def test_omega_eff_equal_amplitudes(self):
        assert omega_eff(math.pi, math.pi) == math.pi

    def test_omega_eff_symmetric(self):
        assert omega_eff(0.7, 4.2) == pytest.approx(omega_eff(4.2, 0.7), rel=1e-15)

    def test_omega_eff_between_inputs(self):
        assert 0.7 < omega_eff(0.7, 4.2) < 4.2

    def test_omega_eff_rejects_zero(self):
        with pytest.raises(ValidationError):
            omega_eff(0.0, 1.0)

    def test_rb_local_reduces_to_global(self):
        assert rb_local(math.pi, math.pi) == rb_global(math.pi)

    def test_rb_local_example(self):
        assert rb_local(1.0, 3.0) == pytest.approx(8.761, abs=1e-3)

    @pytest.mark.parametrize("omega0,omega1", [(1.0, 3.0), (1.5, 0.9), (4.0, 1.6), (0.2, 9.0)])
    def test_rb_local_matches_omega_eff(self, omega0, omega1):
        expected = 0.98 * (C6_N70 / omega_eff(omega0, omega1)) ** (1 / 6)
        assert rb_local(omega0, omega1) == pytest.approx(expected, rel=1e-10)


class TestPeakPopulations:
    def test_sequential_half_at_radius(self):
        assert prr_sequential(rb_sequential(2.0), 2.0) == pytest.approx(0.5, abs=1e-14)

    def test_sequential_example(self):
        assert prr_sequential(10.0, 1.0) == pytest.approx(0.5737, abs=1e-4)

    def test_sequential_far_limit(self):
        assert prr_sequential(1e3, 1.0) == pytest.approx(1.0)

    def test_sequential_array_input(self):
        values = prr_sequential(np.array([8.0, 10.0]), 1.0)
        assert isinstance(values, np.ndarray)
        assert values[1] == pytest.approx(0.5737, abs=1e-4)

    def test_sequential_rejects_non_positive_r(self):
        with pytest.raises(ValidationError):
            prr_sequential(0.0, 1.0)

    def test_global_simplified_half_by_construction(self):
        omega = 2.0
        r = (1.26 / 1.29) * rb_pi(omega)
        assert prr_global_simplified(r, omega) == pytest.approx(0.5, abs=1e-12)

    def test_global_simplified_far_limit(self):
        assert prr_global_simplified(500.0, 1.0) == pytest.approx(1.0)

    def test_global_simplified_domain(self):
        with pytest.raises(ValidationError, match="domain"):
            prr_global_simplified(1.0, 1.0)

    def test_local_far_limit(self):
        assert prr_local(500.0, 1.0, 3.0) == pytest.approx(1.0)

    def test_local_domain(self):
        with pytest.raises(ValidationError):
            prr_local(0.5, 1.0, 3.0)

    @pytest.mark.parametrize("omega", [0.5, 1.0, 3.0])
    def test_local_and_global_close_for_equal_amplitudes(self, omega):
        r = np.linspace(0.5, 2.0, 50) * rb_global(omega)
        diff = np.abs(prr_local(r, omega, omega) - prr_global_simplified(r, omega))
        assert diff.max() < 0.05

    @pytest.mark.parametrize(
        "curve,radius",
        [
            (lambda r: prr_sequential(r, 1.3), rb_sequential(1.3)),
            (lambda r: prr_global_simplified(r, 1.3), rb_global(1.3)),
            (lambda r: prr_local(r, 1.3, 2.6), rb_local(1.3, 2.6)),
        ],
    )
    def test_monotone_probability(self, curve, radius):
        values = curve(np.linspace(0.3, 3.0, 200) * radius)
        assert np.all(values >= 0) and np.all(values <= 1)
        assert np.all(np.diff(values) >= 0)


class TestAmplitudeForRadius:
    @pytest.mark.parametrize("omega", [0.4, 1.0, math.pi, 6.0])
    def test_inverts_global_radius(self, omega):
        assert omega_for_global_radius(rb_global(omega)) == pytest.approx(omega, rel=1e-12)

    @pytest.mark.parametrize("omega", [0.4, 1.0, math.pi, 6.0])
    def test_inverts_sequential_radius(self, omega):
        assert omega_for_sequential_radius(rb_sequential(omega)) == pytest.approx(omega, rel=1e-12)

    def test_larger_radius_needs_weaker_drive(self):
        assert omega_for_global_radius(13.016) < omega_for_global_radius(7.9)
        assert omega_for_global_radius(13.016) == pytest.approx(math.pi / 20, rel=1e-3)
