"""Tests for the violation projector and quench maxima."""

import numpy as np
import pytest

from rydblock.utility_library.blockade_models.simulation import DriveScenario, simulate_prr
from rydblock.utility_library.embedding.metrics import (
    correlation_matrix,
    non_independence_projector,
    quench_maxima,
    violation_probability,
)
from rydblock.utility_library.graphs.disk_graph import AbstractGraph
from rydblock.utility_library.graphs.independence import independent_table
from rydblock.utility_library.graphs.instances import load_bundled_instance, named_graph
from rydblock.utility_library.rydberg_model.register import AtomRegister
from rydblock.utility_library.shared.error_handling import DimensionMismatchError

EDGE = AbstractGraph(2, frozenset({(0, 1)}))


def star_register(scale: float = 1.0, omega: float = np.pi) -> AtomRegister:
    return AtomRegister.build(load_bundled_instance("star").centers * scale, omegas=omega)


class TestProjector:
    def test_edgeless_is_zero(self):
        np.testing.assert_array_equal(non_independence_projector(AbstractGraph(3), 3).entries, np.zeros((8, 8)))

    def test_single_edge_marks_double_excitation(self):
        np.testing.assert_array_equal(non_independence_projector(EDGE, 2).diagonal(), [0, 0, 0, 1])

    def test_complements_independent_sets(self):
        g = named_graph("k23")
        total = non_independence_projector(g, 5).diagonal() + independent_table(g)
        np.testing.assert_array_equal(total, np.ones(32))

    def test_size_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            non_independence_projector(EDGE, 3)


class TestViolationProbability:
    def test_edgeless_target_is_zero(self, pair_register):
        assert violation_probability(pair_register, AbstractGraph(2), duration=10.0) == 0.0

    @pytest.mark.parametrize("r", [5.0, 8.0, 11.0])
    def test_two_atoms_reduce_to_pair_population(self, r):
        reg = AtomRegister.build([(0.0, 0.0), (r, 0.0)], omegas=1.0)
        expected = simulate_prr(DriveScenario.global_drive(1.0), r, duration=20.0)
        assert violation_probability(reg, EDGE, duration=20.0) == pytest.approx(expected, abs=1e-9)

    def test_single_pass_matches(self):
        reg = star_register(1.2)
        g = named_graph("star")
        direct = violation_probability(reg, g, duration=8.0, dt=0.1)
        assert quench_maxima(reg, g, duration=8.0, dt=0.1).violation == pytest.approx(direct, abs=1e-12)

    def test_monotone_under_edge_addition(self):
        reg = star_register(1.3)
        g = named_graph("star_unit")
        sparse = quench_maxima(reg, g, duration=8.0, dt=0.1).violation
        dense = quench_maxima(reg, g.with_edges([(1, 2), (2, 3)]), duration=8.0, dt=0.1).violation
        assert dense >= sparse - 1e-12


class TestCorrelationMatrix:
    def test_single_atom_reaches_full_excitation(self):
        reg = AtomRegister.build([(0.0, 0.0)], omegas=1.0)
        c = correlation_matrix(reg, duration=10.0)
        assert 0.99 < c[0, 0] <= 1.0

    def test_deep_blockade_pair(self, pair_register):
        c = correlation_matrix(pair_register, duration=50.0)
        assert c[0, 1] < 0.01
        assert c[0, 0] > 0.4

    def test_symmetric_and_bounded(self):
        c = correlation_matrix(star_register(1.5), duration=8.0, dt=0.1)
        np.testing.assert_allclose(c, c.T, atol=1e-12)
        assert np.all((c >= 0) & (c <= 1))

    def test_violation_contains_edge_correlations(self):
        g = named_graph("star")
        maxima = quench_maxima(star_register(1.5), g, duration=8.0, dt=0.1)
        worst_edge = max(maxima.correlation[i, j] for i, j in g.edges)
        assert maxima.violation >= worst_edge - 1e-12
