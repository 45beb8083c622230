"""Parameterized expression trees stored in flat pre-order form.

Every node carries one real weight that multiplies the node's raw output.
Trees are immutable; every edit returns a new tree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import List, Sequence, Tuple

import numpy as np

from ..exceptions import WeightLengthError


class Op(str, Enum):
    """Node kinds of the expression alphabet."""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    LOG = "log"
    EXP = "exp"
    VAR = "var"
    CONST = "const1"

    @property
    def arity(self) -> int:
        """Number of children this kind takes."""
        if self in (Op.ADD, Op.SUB, Op.MUL, Op.DIV):
            return 2
        if self in (Op.LOG, Op.EXP):
            return 1
        return 0

    @property
    def is_transcendental(self) -> bool:
        """Whether the kind counts toward transcendental power."""
        return self in (Op.LOG, Op.EXP)


BINARY_OPS: Tuple[Op, ...] = (Op.ADD, Op.SUB, Op.MUL, Op.DIV)
UNARY_OPS: Tuple[Op, ...] = (Op.LOG, Op.EXP)
FUNCTION_OPS: Tuple[Op, ...] = BINARY_OPS + UNARY_OPS


@dataclass(frozen=True)
class Node:
    """A single node; ``index`` is only meaningful for variables."""

    op: Op
    index: int = 0

    @classmethod
    def var(cls, index: int) -> "Node":
        """Create a variable node reading feature ``index``."""
        if index < 0:
            raise ValueError("Variable index must be non-negative")
        return cls(Op.VAR, index)

    @classmethod
    def const(cls) -> "Node":
        """Create the unit constant node."""
        return cls(Op.CONST)

    @property
    def arity(self) -> int:
        """Number of children."""
        return self.op.arity

    @property
    def label(self) -> str:
        """Canonical label, e.g. ``add`` or ``var3``."""
        if self.op is Op.VAR:
            return f"var{self.index}"
        return self.op.value


@dataclass(frozen=True)
class TreeLimits:
    """Structural limits every stored tree must respect."""

    max_nodes: int = 20
    max_depth: int = 17

    def validate(self) -> None:
        """Validate limit values.

        Raises:
            ValueError: If a limit is not positive
        """
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be positive")
        if self.max_depth < 0:
            raise ValueError("max_depth must be non-negative")

    def admits(self, tree: "ExpressionTree") -> bool:
        """Whether ``tree`` fits within the limits."""
        return tree.node_count <= self.max_nodes and tree.depth <= self.max_depth


@dataclass(frozen=True)
class ExpressionTree:
    """Immutable weighted expression tree in pre-order.

    Attributes:
        nodes: Node kinds in pre-order
        weights: One finite weight per node, same order as ``nodes``
    """

    nodes: Tuple[Node, ...]
    weights: Tuple[float, ...]

    def __post_init__(self) -> None:
        """Normalize containers and check structural well-formedness."""
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if len(self.weights) != len(self.nodes):
            raise WeightLengthError(
                f"Expected {len(self.nodes)} weights, got {len(self.weights)}"
            )
        if not self.nodes:
            raise ValueError("Expression tree must have at least one node")
        if not all(math.isfinite(w) for w in self.weights):
            raise ValueError("Expression weights must be finite")
        open_slots = 1
        for position, node in enumerate(self.nodes):
            if open_slots == 0:
                raise ValueError(f"Trailing nodes after complete tree at {position}")
            open_slots += node.arity - 1
        if open_slots != 0:
            raise ValueError("Incomplete expression tree")

    @classmethod
    def from_nodes(cls, nodes: Sequence[Node]) -> "ExpressionTree":
        """Build a tree whose weights are all 1.0."""
        return cls(tuple(nodes), (1.0,) * len(nodes))

    # --- structure -------------------------------------------------------

    @cached_property
    def subtree_ends(self) -> Tuple[int, ...]:
        """Exclusive end position of the subtree rooted at each position."""
        ends = [0] * len(self.nodes)
        sizes: List[int] = []
        for position in range(len(self.nodes) - 1, -1, -1):
            size = 1
            for _ in range(self.nodes[position].arity):
                size += sizes.pop()
            sizes.append(size)
            ends[position] = position + size
        return tuple(ends)

    @cached_property
    def node_depths(self) -> Tuple[int, ...]:
        """Depth of every node; the root has depth 0."""
        depths = []
        pending: List[int] = []
        for node in self.nodes:
            depth = pending.pop() if pending else 0
            depths.append(depth)
            pending.extend([depth + 1] * node.arity)
        return tuple(depths)

    @property
    def node_count(self) -> int:
        """Representation power: number of nodes."""
        return len(self.nodes)

    @property
    def depth(self) -> int:
        """Maximum node depth."""
        return max(self.node_depths)

    @cached_property
    def transcendental_count(self) -> int:
        """Transcendental power: number of log and exp nodes."""
        return sum(1 for node in self.nodes if node.op.is_transcendental)

    @cached_property
    def max_variable_index(self) -> int:
        """Largest variable index used, or -1 when no variable appears."""
        indices = [node.index for node in self.nodes if node.op is Op.VAR]
        return max(indices) if indices else -1

    def __len__(self) -> int:
        return len(self.nodes)

    def children(self, position: int) -> List[int]:
        """Start positions of the children of the node at ``position``."""
        starts = []
        child = position + 1
        for _ in range(self.nodes[position].arity):
            starts.append(child)
            child = self.subtree_ends[child]
        return starts

    def has_variable(self, position: int = 0) -> bool:
        """Whether the subtree at ``position`` reads any variable."""
        end = self.subtree_ends[position]
        return any(node.op is Op.VAR for node in self.nodes[position:end])

    def subtree(self, position: int) -> "ExpressionTree":
        """Copy out the subtree rooted at ``position``."""
        end = self.subtree_ends[position]
        return ExpressionTree(self.nodes[position:end], self.weights[position:end])

    def replace_subtree(
        self, position: int, replacement: "ExpressionTree"
    ) -> "ExpressionTree":
        """Return a tree with the subtree at ``position`` swapped out."""
        end = self.subtree_ends[position]
        return ExpressionTree(
            self.nodes[:position] + replacement.nodes + self.nodes[end:],
            self.weights[:position] + replacement.weights + self.weights[end:],
        )

    def shape_key(self, position: int = 0) -> Tuple:
        """Structure of a subtree with its root weight ignored."""
        end = self.subtree_ends[position]
        return (self.nodes[position:end], self.weights[position + 1 : end])

    # --- weights ---------------------------------------------------------

    def weights_vector(self) -> np.ndarray:
        """Weights as a fresh float array in pre-order."""
        return np.array(self.weights, dtype=float)

    def with_weights(self, weights: Sequence[float]) -> "ExpressionTree":
        """Return a copy carrying new weights.

        Raises:
            WeightLengthError: If the length differs from the node count
        """
        if len(weights) != len(self.nodes):
            raise WeightLengthError(
                f"Expected {len(self.nodes)} weights, got {len(weights)}"
            )
        return ExpressionTree(self.nodes, tuple(float(w) for w in weights))

    def with_root_weight(self, weight: float) -> "ExpressionTree":
        """Return a copy whose root weight is ``weight``."""
        return ExpressionTree(self.nodes, (float(weight),) + self.weights[1:])

    def __str__(self) -> str:
        from .codec import to_text  # pylint: disable=import-outside-toplevel

        return to_text(self)


def node_count(tree: ExpressionTree) -> int:
    """Representation power of ``tree``."""
    return tree.node_count


def transcendental_count(tree: ExpressionTree) -> int:
    """Transcendental power of ``tree``."""
    return tree.transcendental_count


def weights_vector(tree: ExpressionTree) -> np.ndarray:
    """Weights of ``tree`` in pre-order."""
    return tree.weights_vector()


def set_weights(tree: ExpressionTree, weights: Sequence[float]) -> ExpressionTree:
    """Copy of ``tree`` with ``weights`` installed in pre-order."""
    return tree.with_weights(weights)
