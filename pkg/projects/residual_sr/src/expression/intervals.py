"""Conservative value ranges of subtrees over an input box.

A range covers the subtree's weighted output at every unflagged observation
inside the box. ``(-inf, inf)`` means nothing is known.
"""

import math
from typing import Dict, List, Sequence, Tuple

from .evaluator import DIVISOR_EPS, EXP_LIMIT
from .models import ExpressionTree, Op

Interval = Tuple[float, float]
Guard = Tuple[Op, tuple, tuple]

UNBOUNDED: Interval = (-math.inf, math.inf)
GUARDED_OPS = (Op.LOG, Op.EXP, Op.DIV)


def _span(*candidates: float) -> Interval:
    if any(math.isnan(value) for value in candidates):
        return UNBOUNDED
    return min(candidates), max(candidates)


def _scaled(interval: Interval, weight: float) -> Interval:
    if weight == 0.0:
        return (0.0, 0.0)
    return _span(interval[0] * weight, interval[1] * weight)


def _product(left: Interval, right: Interval) -> Interval:
    return _span(*(a * b for a in left for b in right))


def _log_range(argument: Interval) -> Interval:
    low, high = argument
    if high <= 0.0:
        return UNBOUNDED
    return (math.log(low) if low > 0.0 else -math.inf), math.log(high)


def _exp_range(argument: Interval) -> Interval:
    low = max(argument[0], -EXP_LIMIT)
    high = min(argument[1], EXP_LIMIT)
    if low > high:
        return UNBOUNDED
    return math.exp(low), math.exp(high)


def _div_range(numerator: Interval, denominator: Interval) -> Interval:
    low, high = denominator
    if low < DIVISOR_EPS and high > -DIVISOR_EPS:
        return UNBOUNDED
    return _product(numerator, (1.0 / high, 1.0 / low))


def subtree_ranges(
    tree: ExpressionTree, low: Sequence[float], high: Sequence[float]
) -> List[Interval]:
    """Range of every subtree's output, indexed by root position.

    Args:
        tree: Tree to bound
        low: Per-column lower corner of the input box
        high: Per-column upper corner of the input box
    """
    ranges: List[Interval] = [UNBOUNDED] * tree.node_count
    for position in range(tree.node_count - 1, -1, -1):
        node = tree.nodes[position]
        args = [ranges[child] for child in tree.children(position)]
        if node.op is Op.VAR:
            raw = (float(low[node.index]), float(high[node.index]))
        elif node.op is Op.CONST:
            raw = (1.0, 1.0)
        elif node.op is Op.LOG:
            raw = _log_range(args[0])
        elif node.op is Op.EXP:
            raw = _exp_range(args[0])
        elif node.op is Op.ADD:
            raw = _span(args[0][0] + args[1][0], args[0][1] + args[1][1])
        elif node.op is Op.SUB:
            raw = _span(args[0][0] - args[1][1], args[0][1] - args[1][0])
        elif node.op is Op.MUL:
            raw = _product(args[0], args[1])
        else:
            raw = _div_range(args[0], args[1])
        ranges[position] = _scaled(raw, tree.weights[position])
    return ranges


def guards(tree: ExpressionTree) -> Dict[Guard, int]:
    """Guard conditions of ``tree``, mapped to the position of their argument.

    A guard is identified by the guarded operator and the exact argument
    subtree (the divisor for ``div``). Equal guards fire on equal inputs.
    """
    found: Dict[Guard, int] = {}
    for position, node in enumerate(tree.nodes):
        if node.op in GUARDED_OPS:
            argument = tree.children(position)[-1]
            piece = tree.subtree(argument)
            found.setdefault((node.op, piece.nodes, piece.weights), argument)
    return found


def guard_inactive(op: Op, argument: Interval) -> bool:
    """Whether a guard on ``op`` can never fire for an argument in range."""
    low, high = argument
    if op is Op.LOG:
        return low > 0.0
    if op is Op.EXP:
        return -EXP_LIMIT <= low and high <= EXP_LIMIT
    return low >= DIVISOR_EPS or high <= -DIVISOR_EPS


def guards_preserved(
    before: ExpressionTree,
    after: ExpressionTree,
    low: Sequence[float],
    high: Sequence[float],
) -> bool:
    """Whether both trees raise guard flags at the same inputs of the box.

    Guards shared by both trees fire together. Every other guard must be
    provably inactive over the box.
    """
    old, new = guards(before), guards(after)
    for tree, own, other in ((before, old, new), (after, new, old)):
        ranges = None
        for key, argument in own.items():
            if key in other:
                continue
            if ranges is None:
                ranges = subtree_ranges(tree, low, high)
            if not guard_inactive(key[0], ranges[argument]):
                return False
    return True
