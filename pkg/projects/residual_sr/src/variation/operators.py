"""Subtree crossover and subtree mutation under size and depth limits."""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ..expression import ExpressionTree, TreeLimits
from .initialization import build_tree

logger = logging.getLogger(__name__)


@dataclass
class VariationConfig:
    """Operator rates and limits.

    Attributes:
        crossover_rate: Probability a parent pair is recombined
        mutation_rate: Probability a child is mutated
        mutation_max_depth: Depth limit of freshly grown subtrees
        init_min_depth: Shallowest ramped depth at initialization
        init_max_depth: Deepest ramped depth at initialization
        max_retries: Point re-draws before falling back to the parent
        limits: Structural limits every output must respect
    """

    crossover_rate: float = 0.9
    mutation_rate: float = 0.1
    mutation_max_depth: int = 4
    init_min_depth: int = 2
    init_max_depth: int = 6
    max_retries: int = 10
    limits: TreeLimits = field(default_factory=TreeLimits)

    def validate(self) -> None:
        """Validate configuration values.

        Raises:
            ValueError: If a rate or depth is out of range
        """
        for name in ("crossover_rate", "mutation_rate"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")
        if self.mutation_max_depth < 0:
            raise ValueError("mutation_max_depth must be non-negative")
        if not 1 <= self.init_min_depth <= self.init_max_depth:
            raise ValueError("init depths must satisfy 1 <= min <= max")
        if self.max_retries < 1:
            raise ValueError("max_retries must be >= 1")
        self.limits.validate()


def subtree_crossover(
    parent1: ExpressionTree,
    parent2: ExpressionTree,
    rng: np.random.Generator,
    config: Optional[VariationConfig] = None,
) -> Tuple[ExpressionTree, ExpressionTree]:
    """Swap uniformly chosen subtrees between two parents.

    Both children come from the same pair of crossover points. A child that
    never fits the limits within ``max_retries`` draws is replaced by a copy
    of its parent.
    """
    config = config or VariationConfig()
    if rng.random() >= config.crossover_rate:
        return parent1, parent2

    fallback1: Optional[ExpressionTree] = None
    fallback2: Optional[ExpressionTree] = None
    for _ in range(config.max_retries):
        point1 = int(rng.integers(parent1.node_count))
        point2 = int(rng.integers(parent2.node_count))
        child1 = parent1.replace_subtree(point1, parent2.subtree(point2))
        child2 = parent2.replace_subtree(point2, parent1.subtree(point1))
        fits1 = config.limits.admits(child1)
        fits2 = config.limits.admits(child2)
        if fits1 and fits2:
            return child1, child2
        if fits1 and fallback1 is None:
            fallback1 = child1
        if fits2 and fallback2 is None:
            fallback2 = child2
    logger.debug(
        "Crossover fell back to parent copies after %d draws", config.max_retries
    )
    return (
        parent1 if fallback1 is None else fallback1,
        parent2 if fallback2 is None else fallback2,
    )


def subtree_mutation(
    tree: ExpressionTree,
    rng: np.random.Generator,
    n_features: int = 1,
    config: Optional[VariationConfig] = None,
) -> ExpressionTree:
    """Replace a uniformly chosen subtree with a freshly grown one."""
    config = config or VariationConfig()
    if rng.random() >= config.mutation_rate:
        return tree
    for _ in range(config.max_retries):
        point = int(rng.integers(tree.node_count))
        donor = build_tree(
            rng, config.mutation_max_depth, n_features, "grow", root_function=False
        )
        child = tree.replace_subtree(point, donor)
        if config.limits.admits(child):
            return child
    return tree
