"""Unit tests for QD metrics, hypervolume and loss landscapes."""

import unittest

import numpy as np
import pytest
from pymoo.indicators.hv import HV

from projects.residual_sr.src.archive import (
    ArchiveBounds,
    BehaviorDescriptor,
    GridArchive,
)
from projects.residual_sr.src.datasets import Dataset
from projects.residual_sr.src.expression import builders as b
from projects.residual_sr.src.metrics import (
    HV_REFERENCE,
    coverage,
    hypervolume,
    loss_landscape,
    qd_score,
    subset_accuracy,
)


def _reference_hypervolume(points):
    """Hypervolume via pymoo on the equivalent minimization problem."""
    front = np.array([(-f, n) for f, n in points], dtype=float)
    indicator = HV(ref_point=np.array([-HV_REFERENCE[0], HV_REFERENCE[1]]))
    return float(indicator(front))


class TestHypervolume(unittest.TestCase):
    """Test the two-objective hypervolume."""

    def test_single_point(self):
        assert hypervolume([(0.5, 10)]) == pytest.approx(5.0)

    def test_two_points(self):
        """Overlapping rectangles are counted once."""
        assert hypervolume([(0.8, 12), (0.5, 5)]) == pytest.approx(9.9)

    def test_perfect_single_node(self):
        assert hypervolume([(1.0, 1)]) == pytest.approx(19.0)

    def test_points_beyond_reference(self):
        """Points at or past the reference add nothing."""
        assert hypervolume([(0.0, 3), (0.7, 20), (0.9, 25)]) == 0.0
        assert hypervolume([]) == 0.0

    def test_dominated_points_ignored(self):
        """Adding a dominated point leaves the value unchanged."""
        base = [(0.8, 12), (0.5, 5)]
        assert hypervolume(base + [(0.4, 15)]) == pytest.approx(hypervolume(base))

    def test_permutation_invariant(self):
        points = [(0.3, 2), (0.9, 14), (0.6, 7), (0.75, 9)]
        assert hypervolume(points) == pytest.approx(hypervolume(points[::-1]))

    def test_matches_pymoo(self):
        """Random fronts agree with pymoo's indicator."""
        rng = np.random.default_rng(8)
        for _ in range(20):
            count = int(rng.integers(1, 12))
            points = list(
                zip(rng.uniform(0.01, 1.0, count), rng.integers(1, 20, count))
            )
            assert hypervolume(points) == pytest.approx(
                _reference_hypervolume(points), rel=1e-9
            )


class TestArchiveMetrics(unittest.TestCase):
    """Test coverage and QD-Score."""

    def test_coverage_and_qd_score(self):
        bounds = ArchiveBounds(clusters=1, rep_range=(1, 2), trans_range=(0, 1))
        archive = GridArchive(bounds)
        assert coverage(archive) == 0.0
        assert qd_score(archive) == 0.0
        archive.update(b.var(0), 0.5, BehaviorDescriptor(0, 1, 0))
        archive.update(b.log(b.var(0)), 0.3, BehaviorDescriptor(0, 2, 1))
        assert coverage(archive) == pytest.approx(0.5)
        assert qd_score(archive) == pytest.approx(0.2)

    def test_subset_accuracy(self):
        """Accuracy is the MSE fitness on the subset."""
        subset = Dataset(inputs=[[1.0], [2.0]], targets=[2.0, 4.0])
        assert subset_accuracy(b.var(0, 2.0), subset) == pytest.approx(1.0)
        assert subset_accuracy(b.var(0), subset) == pytest.approx(1 / 3.5)


class TestLossLandscape(unittest.TestCase):
    """Test weight-grid sweeps."""

    def setUp(self):
        """Dataset on ``y = 2x + 1``."""
        x = np.linspace(-1.0, 1.0, 9)
        self.dataset = Dataset(inputs=x.reshape(-1, 1), targets=2 * x + 1)
        self.tree = b.add(b.var(0), b.const())

    def test_minimum_at_true_weights(self):
        grid = loss_landscape(
            self.tree, self.dataset, "mse", (1, 2), [0, 1, 2, 3, 4], [0, 1, 2]
        )
        assert grid.losses.shape == (5, 3)
        assert grid.argmin() == (2.0, 1.0)
        assert grid.losses[2, 1] == pytest.approx(0.0)
        rows = grid.rows()
        assert len(rows) == 15
        assert rows[0][:2] == (0.0, 0.0)
        assert rows[1][:2] == (0.0, 1.0)

    def test_bad_indices(self):
        with pytest.raises(ValueError):
            loss_landscape(self.tree, self.dataset, "mse", (1, 1), [0], [0])
        with pytest.raises(ValueError):
            loss_landscape(self.tree, self.dataset, "mse", (0, 3), [0], [0])
