"""Unit tests for CMA-ES coefficient optimization."""

import unittest
from unittest.mock import MagicMock

import numpy as np
import pytest

from projects.residual_sr.src.archive import ArchiveBounds, GridArchive
from projects.residual_sr.src.datasets import Dataset
from projects.residual_sr.src.expression import builders as b
from projects.residual_sr.src.objectives import EvaluationBudget, ExpressionEvaluator
from projects.residual_sr.src.optimizers import (
    CoefficientOptimizer,
    EsConfig,
    optimize_coefficients,
)


class TestCoefficientOptimizer(unittest.TestCase):
    """Test budgeted weight tuning."""

    def setUp(self):
        """Dataset on ``y = 3x``."""
        x = np.linspace(1.0, 5.0, 10)
        self.dataset = Dataset(inputs=x.reshape(-1, 1), targets=3 * x)

    def test_recovers_single_weight(self):
        """Default settings fit ``w * x`` to ``y = 3x`` almost exactly."""
        tree = optimize_coefficients(b.var(0), self.dataset, "mse")
        assert tree.weights[0] == pytest.approx(3.0, abs=1e-2)
        evaluator = ExpressionEvaluator(self.dataset, "mse")
        assert evaluator.evaluate(tree).loss <= 1e-3

    def test_sink_sees_every_candidate(self):
        """Default settings offer 20 generations of 10 candidates."""
        sink = MagicMock()
        evaluator = ExpressionEvaluator(self.dataset, "mse")
        optimizer = CoefficientOptimizer(evaluator, sink=sink)
        result = optimizer.optimize(
            evaluator.evaluate(b.var(0)), np.random.default_rng(0)
        )
        assert sink.call_count == 200
        assert result.generations == 20
        assert result.evaluations == 200

    def test_never_worse_than_start(self):
        evaluator = ExpressionEvaluator(self.dataset, "mae")
        start = evaluator.evaluate(b.var(0, 2.9))
        result = CoefficientOptimizer(evaluator, EsConfig(generations=3)).optimize(
            start, np.random.default_rng(1)
        )
        assert result.best.loss <= start.loss
        assert list(result.best_history) == sorted(result.best_history, reverse=True)

    def test_generation_needs_full_budget(self):
        """A generation runs only when all of its samples are affordable."""
        budget = EvaluationBudget(16)
        evaluator = ExpressionEvaluator(self.dataset, "mse", budget)
        start = evaluator.evaluate(b.var(0))
        result = CoefficientOptimizer(evaluator).optimize(
            start, np.random.default_rng(2)
        )
        assert result.generations == 1
        assert budget.used == 11

    def test_affine_fit(self):
        """Default settings bring an affine structure close to the true line.

        The redundant root weight leaves a curved valley that 200 samples do
        not fully resolve, so the bound is loose.
        """
        x = np.linspace(0.0, 10.0, 20)
        dataset = Dataset(inputs=x.reshape(-1, 1), targets=2 * x + 5)
        evaluator = ExpressionEvaluator(dataset, "mse")
        start = evaluator.evaluate(b.add(b.var(0), b.const())).loss
        for seed in range(3):
            tree = optimize_coefficients(
                b.add(b.var(0), b.const()),
                dataset,
                "mse",
                rng=np.random.default_rng(seed),
            )
            loss = evaluator.evaluate(tree).loss
            assert loss < 1.0
            assert loss < 0.01 * start

    def test_archive_receives_candidates(self):
        """Candidates are described and offered to the archive."""
        archive = GridArchive(ArchiveBounds(clusters=2))
        optimize_coefficients(
            b.add(b.var(0), b.const()),
            self.dataset,
            "mse",
            EsConfig(population=4, generations=2),
            archive=archive,
        )
        assert archive.occupied_count >= 1
        assert all(elite.descriptor.rep_power == 3 for elite in archive.elites())
