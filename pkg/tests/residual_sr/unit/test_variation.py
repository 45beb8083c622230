"""Unit tests for tree initialization and genetic operators."""

import unittest

import numpy as np
import pytest

from projects.residual_sr.src.expression import Op, TreeLimits
from projects.residual_sr.src.expression import builders as b
from projects.residual_sr.src.variation import (
    VariationConfig,
    build_tree,
    build_valid_tree,
    ramped_half_and_half,
    subtree_crossover,
    subtree_mutation,
)

WIDE = TreeLimits(max_nodes=10_000, max_depth=1_000)


class TestBuildTree(unittest.TestCase):
    """Test random tree construction."""

    def setUp(self):
        self.rng = np.random.default_rng(0)

    def test_full_reaches_exact_depth(self):
        for depth in range(1, 5):
            assert build_tree(self.rng, depth, 2, "full").depth == depth

    def test_depth_zero_is_terminal(self):
        tree = build_tree(self.rng, 0, 1, "grow")
        assert tree.node_count == 1
        assert tree.nodes[0].op in (Op.VAR, Op.CONST)

    def test_grow_respects_depth(self):
        for _ in range(50):
            tree = build_tree(self.rng, 3, 2, "grow")
            assert tree.depth <= 3
            assert tree.max_variable_index <= 1

    def test_weights_start_at_one(self):
        tree = build_tree(self.rng, 3, 1, "full")
        assert set(tree.weights) == {1.0}

    def test_valid_tree_fits_limits(self):
        limits = TreeLimits(max_nodes=7, max_depth=6)
        for _ in range(10):
            assert limits.admits(build_valid_tree(self.rng, 6, "full", 1, limits))


class TestRampedHalfAndHalf(unittest.TestCase):
    """Test the initial population."""

    def test_population_size_and_limits(self):
        rng = np.random.default_rng(1)
        population = ramped_half_and_half(12, rng, n_features=2)
        assert len(population) == 12
        assert all(TreeLimits().admits(tree) for tree in population)

    def test_reproducible(self):
        first = ramped_half_and_half(6, np.random.default_rng(3))
        second = ramped_half_and_half(6, np.random.default_rng(3))
        assert first == second

    def test_invalid_arguments(self):
        rng = np.random.default_rng(0)
        with pytest.raises(ValueError):
            ramped_half_and_half(0, rng)
        with pytest.raises(ValueError):
            ramped_half_and_half(4, rng, min_depth=5, max_depth=2)


class TestCrossover(unittest.TestCase):
    """Test subtree crossover."""

    def setUp(self):
        self.parent1 = b.add(b.var(0), b.mul(b.const(2.0), b.var(0)))
        self.parent2 = b.exp(b.sub(b.var(0), b.const(3.0)))

    def test_rate_zero_returns_parents(self):
        config = VariationConfig(crossover_rate=0.0)
        children = subtree_crossover(
            self.parent1, self.parent2, np.random.default_rng(0), config
        )
        assert children == (self.parent1, self.parent2)

    def test_swap_preserves_total_size(self):
        """Exchanging subtrees conserves the combined node count."""
        config = VariationConfig(crossover_rate=1.0, limits=WIDE)
        rng = np.random.default_rng(5)
        total = self.parent1.node_count + self.parent2.node_count
        for _ in range(30):
            child1, child2 = subtree_crossover(self.parent1, self.parent2, rng, config)
            assert child1.node_count + child2.node_count == total

    def test_children_respect_limits(self):
        rng = np.random.default_rng(9)
        limits = TreeLimits(max_nodes=6, max_depth=3)
        config = VariationConfig(crossover_rate=1.0, limits=limits)
        for _ in range(30):
            for child in subtree_crossover(self.parent1, self.parent2, rng, config):
                assert limits.admits(child)


class TestMutation(unittest.TestCase):
    """Test subtree mutation."""

    def test_rate_zero_is_identity(self):
        tree = b.log(b.var(0))
        config = VariationConfig(mutation_rate=0.0)
        assert subtree_mutation(tree, np.random.default_rng(0), 1, config) is tree

    def test_mutants_respect_limits(self):
        rng = np.random.default_rng(2)
        config = VariationConfig(mutation_rate=1.0)
        tree = b.add(b.var(0), b.const())
        for _ in range(40):
            tree = subtree_mutation(tree, rng, 2, config)
            assert config.limits.admits(tree)
            assert tree.max_variable_index <= 1


class TestVariationConfig(unittest.TestCase):
    """Test operator configuration checks."""

    def test_defaults_valid(self):
        VariationConfig().validate()

    def test_invalid_values(self):
        for kwargs in (
            {"crossover_rate": 1.5},
            {"mutation_rate": -0.1},
            {"mutation_max_depth": -1},
            {"init_min_depth": 0},
            {"max_retries": 0},
        ):
            with pytest.raises(ValueError):
                VariationConfig(**kwargs).validate()
