"""Tests for two-atom simulations and blockade-radius extraction."""

import math

import numpy as np
import pytest

from rydblock.utility_library.blockade_models.closed_form import prr_global_simplified, prr_sequential, rb_local, rb_sequential
from rydblock.utility_library.blockade_models.four_level import prr_global_exact
from rydblock.utility_library.blockade_models.simulation import (
    DriveKind,
    DriveScenario,
    prr_long_time,
    rb_from_simulation,
    scan_prr,
    simulate_prr,
)
from rydblock.utility_library.shared.error_handling import BracketError, ValidationError


class TestDriveScenario:
    def test_sequential_leaves_atom_zero_undriven(self):
        scenario = DriveScenario.sequential(2.0)
        assert scenario.omega0 == 0.0
        assert scenario.omega1 == 2.0
        assert scenario.initial_index == 1

    def test_global_starts_in_ground_state(self):
        assert DriveScenario.global_drive(1.0).initial_index == 0

    def test_kind_accepts_strings(self):
        assert DriveScenario("local", 1.0, 2.0).kind is DriveKind.LOCAL

    def test_local_from_average(self):
        scenario = DriveScenario.local_from_average(3.0, 3.0)
        assert scenario.omega0 == pytest.approx(1.5)
        assert scenario.omega1 == pytest.approx(4.5)

    def test_global_needs_equal_amplitudes(self):
        with pytest.raises(ValidationError):
            DriveScenario(DriveKind.GLOBAL, 1.0, 2.0)

    def test_sequential_rejects_drive_on_atom_zero(self):
        with pytest.raises(ValidationError):
            DriveScenario(DriveKind.SEQUENTIAL, 1.0, 2.0)

    def test_rejects_negative_amplitude(self):
        with pytest.raises(ValidationError):
            DriveScenario.local(-1.0, 2.0)

    def test_register_geometry(self):
        reg = DriveScenario.local(1.0, 3.0).register(7.5)
        assert reg.distances()[0, 1] == pytest.approx(7.5)
        assert list(reg.omegas) == [1.0, 3.0]

    def test_local_model_needs_zero_detuning(self):
        with pytest.raises(ValidationError):
            DriveScenario(DriveKind.LOCAL, 1.0, 2.0, delta=0.5).model_prr(8.0)

    def test_detuned_global_model_uses_exact_bound(self):
        value = DriveScenario.global_drive(1.0, delta=0.3).model_prr(9.0)
        assert 0.0 <= value <= 1.0

    def test_label(self):
        assert DriveScenario.global_drive(3.0).label() == "global Ω=3"


class TestSimulatePrr:
    @pytest.mark.parametrize("r", [8.0, 10.0, 12.0])
    def test_sequential_matches_two_level_formula(self, r):
        simulated = simulate_prr(DriveScenario.sequential(1.0), r, duration=50.0)
        assert simulated == pytest.approx(prr_sequential(r, 1.0), abs=2e-3)

    def test_sequential_with_detuning(self):
        simulated = simulate_prr(DriveScenario.sequential(1.0, delta=0.5), 9.0, duration=50.0)
        assert simulated == pytest.approx(prr_sequential(9.0, 1.0, 0.5), abs=2e-3)

    def test_blockaded_pair(self):
        assert simulate_prr(DriveScenario.global_drive(1.0), 4.0, duration=50.0) < 0.01

    def test_distant_pair(self):
        assert simulate_prr(DriveScenario.global_drive(1.0), 40.0, duration=50.0) > 0.99

    def test_scan_is_worker_independent(self):
        scenario = DriveScenario.local(1.0, 2.0)
        r_values = np.linspace(6.0, 12.0, 5)
        serial = scan_prr(scenario, r_values, duration=20.0, workers=1)
        threaded = scan_prr(scenario, r_values, duration=20.0, workers=3)
        assert np.array_equal(serial, threaded)

    def test_scan_reports_progress(self):
        calls = []
        scan_prr(DriveScenario.global_drive(1.0), [6.0, 8.0, 10.0], duration=5.0, workers=1,
                 on_done=lambda: calls.append(1))
        assert len(calls) == 3


class TestRbFromSimulation:
    def test_sequential_radius(self):
        rb = rb_from_simulation(DriveScenario.sequential(1.0), duration=50.0, tol_r=1e-3)
        assert rb == pytest.approx(rb_sequential(1.0), rel=0.03)
        assert rb_sequential(1.0) == pytest.approx(9.755, abs=1e-3)

    def test_sequential_radius_at_pi(self):
        rb = rb_from_simulation(DriveScenario.sequential(math.pi), duration=50.0, tol_r=1e-2)
        assert rb == pytest.approx(8.061, rel=0.03)

    def test_no_sign_change(self):
        with pytest.raises(BracketError, match="no sign change"):
            rb_from_simulation(DriveScenario.sequential(1.0), duration=50.0, bracket=(20.0, 30.0))

    def test_rejects_bad_tolerance(self):
        with pytest.raises(ValidationError):
            rb_from_simulation(DriveScenario.sequential(1.0), tol_r=0.0)


class TestLongTime:
    @pytest.mark.parametrize("r", [5.0, 8.0, 10.0, 14.0])
    @pytest.mark.parametrize("delta", [0.0, 0.4])
    def test_sequential_matches_closed_form(self, r, delta):
        scenario = DriveScenario.sequential(1.0, delta)
        assert prr_long_time(scenario, r) == pytest.approx(prr_sequential(r, 1.0, delta), abs=1e-9)

    @pytest.mark.parametrize("r", [6.0, 8.0, 9.0, 12.0])
    @pytest.mark.parametrize("omega", [1.0, 2.5])
    def test_global_matches_four_level_bound(self, r, omega):
        scenario = DriveScenario.global_drive(omega)
        assert prr_long_time(scenario, r) == pytest.approx(prr_global_exact(r, omega), abs=1e-9)

    @pytest.mark.parametrize("scenario", [
        DriveScenario.local(1.5, 0.9),
        DriveScenario.local(1.0, 0.4),
        DriveScenario.global_drive(1.0),
    ])
    def test_quench_never_exceeds_bound(self, scenario):
        for r in np.linspace(6.0, 14.0, 9):
            assert simulate_prr(scenario, float(r), duration=20.0) <= prr_long_time(scenario, float(r)) + 1e-9

    def test_local_at_half_crossing(self):
        # Ω₀ = 1.5, Ω₁ = 0.9 at 9.5 µm, where the local model gives 0.5507
        assert prr_long_time(DriveScenario.local(1.5, 0.9), 9.5) == pytest.approx(0.5497, abs=2e-3)

    def test_free_atoms_reach_full_population(self):
        assert prr_long_time(DriveScenario.local(1.0, 0.6), 200.0) == pytest.approx(1.0, abs=1e-6)


@pytest.mark.acceptance
class TestSimulatedRadius:
    """Simulated 0.5 crossings against the closed forms at T = 50 µs."""

    @pytest.mark.parametrize("omega", np.linspace(1.0, 5.0, 8).tolist())
    def test_sequential(self, omega):
        scenario = DriveScenario.sequential(omega)
        assert rb_from_simulation(scenario, duration=50.0) == pytest.approx(scenario.model_radius(), rel=0.03)

    @pytest.mark.parametrize("omega", np.linspace(1.0, 5.0, 8).tolist())
    def test_global(self, omega):
        scenario = DriveScenario.global_drive(omega)
        assert rb_from_simulation(scenario, duration=50.0) == pytest.approx(scenario.model_radius(), rel=0.03)

    @pytest.mark.parametrize("omega_avg", np.linspace(1.5, 5.0, 8).tolist())
    def test_local(self, omega_avg):
        scenario = DriveScenario.local_from_average(omega_avg, 0.6)
        assert rb_from_simulation(scenario, duration=50.0) == pytest.approx(scenario.model_radius(), rel=0.03)

    def test_local_outside_fitted_ratios(self):
        scenario = DriveScenario.local_from_average(3.0, 3.0)
        assert rb_from_simulation(scenario, duration=50.0) == pytest.approx(scenario.model_radius(), rel=0.03)

    @pytest.mark.parametrize("ratio", [0.4, 0.6, 0.8, 1.0])
    def test_local_model_is_lower_bound(self, ratio):
        scenario = DriveScenario.local(2.0, 2.0 * ratio)
        assert rb_from_simulation(scenario, duration=50.0) >= 0.98 * rb_local(2.0, 2.0 * ratio)


@pytest.mark.acceptance
class TestPairCurves:
    """Quench curves over [0.6, 2]·r_B at T = 50 µs."""

    @pytest.mark.parametrize("omega", [1.0, 3.0])
    def test_sequential_follows_closed_form(self, omega):
        scenario = DriveScenario.sequential(omega)
        r = np.linspace(0.6, 2.0, 30) * scenario.model_radius()
        prr = scan_prr(scenario, r, duration=50.0)
        assert np.max(np.abs(prr - prr_sequential(r, omega))) <= 0.05

    @pytest.mark.parametrize("omega", [1.0, 3.0])
    def test_global_follows_simplified_form(self, omega):
        scenario = DriveScenario.global_drive(omega)
        r = np.linspace(0.6, 2.0, 30) * scenario.model_radius()
        prr = scan_prr(scenario, r, duration=50.0)
        assert np.max(np.abs(prr - prr_global_simplified(r, omega))) <= 0.05

    @pytest.mark.parametrize("omega_avg", [1.0, 3.0])
    def test_local_outside_fitted_ratios_stays_below_bound(self, omega_avg):
        scenario = DriveScenario.local_from_average(omega_avg, 3.0)
        r = np.linspace(0.6, 2.0, 30) * scenario.model_radius()
        prr = scan_prr(scenario, r, duration=50.0)
        bound = np.array([prr_long_time(scenario, float(x)) for x in r])
        assert np.all(prr <= bound + 1e-9)
