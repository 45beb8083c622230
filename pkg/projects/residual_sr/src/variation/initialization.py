"""Random tree construction: grow, full and ramped half-and-half."""

import logging
from typing import List, Optional

import numpy as np

from ..expression import FUNCTION_OPS, ExpressionTree, Node, TreeLimits

logger = logging.getLogger(__name__)

ATTEMPTS_PER_DEPTH = 100


def _terminal(rng: np.random.Generator, n_features: int) -> Node:
    choice = int(rng.integers(n_features + 1))
    return Node.const() if choice == n_features else Node.var(choice)


def _function(rng: np.random.Generator) -> Node:
    return Node(FUNCTION_OPS[int(rng.integers(len(FUNCTION_OPS)))])


def build_tree(
    rng: np.random.Generator,
    max_depth: int,
    n_features: int = 1,
    method: str = "grow",
    root_function: bool = True,
) -> ExpressionTree:
    """Build one random tree in pre-order, all weights 1.

    Args:
        rng: Random generator
        max_depth: Deepest level a node may occupy
        n_features: Number of input variables
        method: ``full`` places functions until ``max_depth``; ``grow``
            picks functions or terminals at random
        root_function: Force a function at the root when ``max_depth > 0``
    """
    function_share = len(FUNCTION_OPS) / (len(FUNCTION_OPS) + n_features + 1)
    nodes: List[Node] = []
    open_slots: List[int] = []
    while True:
        depth = len(open_slots)
        if depth < max_depth and (
            method == "full"
            or (depth == 0 and root_function)
            or rng.random() < function_share
        ):
            node = _function(rng)
            nodes.append(node)
            open_slots.append(node.arity)
            continue
        nodes.append(_terminal(rng, n_features))
        while open_slots:
            open_slots[-1] -= 1
            if open_slots[-1] > 0:
                break
            open_slots.pop()
        if not open_slots:
            return ExpressionTree.from_nodes(nodes)


def build_valid_tree(
    rng: np.random.Generator,
    depth: int,
    method: str,
    n_features: int = 1,
    limits: Optional[TreeLimits] = None,
) -> ExpressionTree:
    """Reject-and-retry until the tree fits ``limits``; lowers the target
    depth after repeated failures."""
    limits = limits or TreeLimits()
    while True:
        for _ in range(ATTEMPTS_PER_DEPTH):
            tree = build_tree(rng, depth, n_features, method)
            if limits.admits(tree):
                return tree
        if depth <= 1:
            return build_tree(rng, 0, n_features, method)
        logger.debug(
            "No %s tree of depth %d fits limits; lowering depth", method, depth
        )
        depth -= 1


def ramped_half_and_half(
    count: int,
    rng: np.random.Generator,
    n_features: int = 1,
    limits: Optional[TreeLimits] = None,
    min_depth: int = 2,
    max_depth: int = 6,
) -> List[ExpressionTree]:
    """Initial population cycling through depths and alternating full/grow.

    Raises:
        ValueError: If ``count < 1`` or the depth ramp is empty
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if min_depth > max_depth or min_depth < 1:
        raise ValueError(f"Invalid depth ramp [{min_depth}, {max_depth}]")
    depths = max_depth - min_depth + 1
    return [
        build_valid_tree(
            rng,
            min_depth + (index // 2) % depths,
            "full" if index % 2 == 0 else "grow",
            n_features,
            limits,
        )
        for index in range(count)
    ]
