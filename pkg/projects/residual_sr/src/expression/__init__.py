"""Weighted expression trees, guarded evaluation and canonical text."""

from .codec import from_text, to_infix, to_text
from .evaluator import (
    PENALTY,
    BatchOutcome,
    EvalOutcome,
    evaluate,
    evaluate_batch,
    evaluate_weight_matrix,
)
from .intervals import guards_preserved, subtree_ranges
from .models import (
    BINARY_OPS,
    FUNCTION_OPS,
    UNARY_OPS,
    ExpressionTree,
    Node,
    Op,
    TreeLimits,
    node_count,
    set_weights,
    transcendental_count,
    weights_vector,
)

__all__ = [
    "BINARY_OPS",
    "FUNCTION_OPS",
    "UNARY_OPS",
    "PENALTY",
    "BatchOutcome",
    "EvalOutcome",
    "ExpressionTree",
    "Node",
    "Op",
    "TreeLimits",
    "evaluate",
    "evaluate_batch",
    "evaluate_weight_matrix",
    "from_text",
    "guards_preserved",
    "node_count",
    "set_weights",
    "subtree_ranges",
    "to_infix",
    "to_text",
    "transcendental_count",
    "weights_vector",
]
