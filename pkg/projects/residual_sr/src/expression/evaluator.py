"""Guarded, vectorized evaluation of expression trees.

Each observation carries its own violation flag. A flagged observation is
unusable: its value is meaningless and its residual is the fixed penalty.
Observations never affect each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .models import ExpressionTree, Op

PENALTY = 1e6
DIVISOR_EPS = 1e-12
EXP_LIMIT = 100.0


@dataclass(frozen=True)
class EvalOutcome:
    """Result of evaluating one observation."""

    value: Optional[float]
    flagged: bool

    @classmethod
    def ok(cls, value: float) -> "EvalOutcome":
        return cls(value=float(value), flagged=False)

    @classmethod
    def violation(cls) -> "EvalOutcome":
        return cls(value=None, flagged=True)

    def residual(self, target: float) -> float:
        """Signed residual ``target - value``, or the penalty when flagged."""
        if self.flagged:
            return PENALTY
        return float(target) - float(self.value)


@dataclass(frozen=True)
class BatchOutcome:
    """Per-observation values and flags; values under a flag are placeholders."""

    values: np.ndarray
    flagged: np.ndarray

    def residuals(self, targets: np.ndarray) -> np.ndarray:
        """Signed residuals with the penalty substituted where flagged."""
        return np.where(self.flagged, PENALTY, targets - self.values)

    def outcome(self, row: int) -> EvalOutcome:
        if self.flagged[row]:
            return EvalOutcome.violation()
        return EvalOutcome.ok(self.values[row])


def evaluate_weight_matrix(
    tree: ExpressionTree, weights: np.ndarray, inputs: np.ndarray
) -> BatchOutcome:
    """Evaluate one tree shape under many weight vectors at once.

    Args:
        tree: Tree whose node kinds are evaluated
        weights: Array of shape ``(m, node_count)``
        inputs: Array of shape ``(n, d)``

    Returns:
        BatchOutcome with ``(m, n)`` values and flags

    Raises:
        ValueError: If shapes do not fit the tree
    """
    inputs = np.atleast_2d(np.asarray(inputs, dtype=float))
    weights = np.atleast_2d(np.asarray(weights, dtype=float))
    if weights.shape[1] != tree.node_count:
        raise ValueError(
            f"Weight matrix has {weights.shape[1]} columns, tree has "
            f"{tree.node_count} nodes"
        )
    if tree.max_variable_index >= inputs.shape[1]:
        raise ValueError(
            f"Tree reads var{tree.max_variable_index} but inputs have "
            f"{inputs.shape[1]} columns"
        )
    shape = (weights.shape[0], inputs.shape[0])
    flagged = np.zeros(shape, dtype=bool)
    stack: List[np.ndarray] = []

    with np.errstate(all="ignore"):
        for position in range(tree.node_count - 1, -1, -1):
            op = tree.nodes[position].op
            if op is Op.VAR:
                raw = np.broadcast_to(inputs[:, tree.nodes[position].index], shape)
            elif op is Op.CONST:
                raw = np.ones(shape)
            elif op is Op.LOG:
                arg = stack.pop()
                bad = arg <= 0.0
                flagged |= bad
                raw = np.log(np.where(bad, 1.0, arg))
            elif op is Op.EXP:
                arg = stack.pop()
                bad = np.abs(arg) > EXP_LIMIT
                flagged |= bad
                raw = np.exp(np.where(bad, 0.0, arg))
            else:
                left = stack.pop()
                right = stack.pop()
                if op is Op.ADD:
                    raw = left + right
                elif op is Op.SUB:
                    raw = left - right
                elif op is Op.MUL:
                    raw = left * right
                else:
                    bad = np.abs(right) < DIVISOR_EPS
                    flagged |= bad
                    raw = left / np.where(bad, 1.0, right)
            out = weights[:, position : position + 1] * raw
            overflow = ~np.isfinite(out)
            if overflow.any():
                flagged |= overflow
                out = np.where(overflow, 0.0, out)
            stack.append(out)

    return BatchOutcome(values=stack.pop(), flagged=flagged)


def evaluate_batch(tree: ExpressionTree, inputs: np.ndarray) -> BatchOutcome:
    """Evaluate ``tree`` on every row of ``inputs``."""
    outcome = evaluate_weight_matrix(tree, tree.weights_vector()[None, :], inputs)
    return BatchOutcome(values=outcome.values[0], flagged=outcome.flagged[0])


def evaluate(tree: ExpressionTree, x: np.ndarray) -> EvalOutcome:
    """Evaluate ``tree`` on a single input vector."""
    row = np.asarray(x, dtype=float).reshape(1, -1)
    return evaluate_batch(tree, row).outcome(0)
