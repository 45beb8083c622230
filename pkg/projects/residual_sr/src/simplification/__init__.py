"""Constant folding and probe-verified algebraic simplification."""

from .folding import constant_fold
from .rewrites import RULE_FAMILIES, cancel_factors, collect_terms, combine_exponents
from .simplifier import (
    ExpressionSimplifier,
    algebraic_simplify,
    draw_probes,
    simplify,
)

__all__ = [
    "RULE_FAMILIES",
    "ExpressionSimplifier",
    "algebraic_simplify",
    "cancel_factors",
    "collect_terms",
    "combine_exponents",
    "constant_fold",
    "draw_probes",
    "simplify",
]
