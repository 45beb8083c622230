"""Local algebraic rewrite families.

Each rule inspects the subtree rooted at ``position`` and returns a
replacement subtree, or None when it does not apply. Rules only propose;
the simplifier decides whether a proposal is accepted.

Weights are pulled out of sums and products as scalar coefficients, so a
"shape" below is a subtree with its root weight reset to 1.
"""

import math
from typing import Dict, List, Optional, Tuple

from ..expression import ExpressionTree, Op
from ..expression import builders as b

Shape = Tuple[tuple, tuple]


def _normalized(tree: ExpressionTree, position: int) -> ExpressionTree:
    return tree.subtree(position).with_root_weight(1.0)


def _key(shape: ExpressionTree) -> Shape:
    return (shape.nodes, shape.weights)


def _chain(pieces: List[ExpressionTree], op: Op) -> ExpressionTree:
    result = pieces[0]
    for piece in pieces[1:]:
        result = b.compose(op, result, piece)
    return result


# --- (a) term collection --------------------------------------------------


def _collect_terms(
    tree: ExpressionTree,
    position: int,
    coefficient: float,
    out: List[Tuple[float, ExpressionTree]],
) -> None:
    node = tree.nodes[position]
    weight = tree.weights[position]
    if node.op in (Op.ADD, Op.SUB):
        left, right = tree.children(position)
        sign = 1.0 if node.op is Op.ADD else -1.0
        _collect_terms(tree, left, coefficient * weight, out)
        _collect_terms(tree, right, sign * coefficient * weight, out)
    else:
        out.append((coefficient * weight, _normalized(tree, position)))


def collect_terms(tree: ExpressionTree, position: int) -> Optional[ExpressionTree]:
    """Merge like terms of a sum: ``x + 2x -> 3x``, ``1 + x + 2 -> x + 3``."""
    if tree.nodes[position].op not in (Op.ADD, Op.SUB):
        return None
    terms: List[Tuple[float, ExpressionTree]] = []
    _collect_terms(tree, position, 1.0, terms)

    groups: Dict[Shape, List] = {}
    for coefficient, shape in terms:
        entry = groups.setdefault(_key(shape), [0.0, shape])
        entry[0] += coefficient
    if len(groups) == len(terms):
        return None

    pieces = [
        shape.with_root_weight(coefficient)
        for coefficient, shape in groups.values()
        if coefficient != 0.0 and math.isfinite(coefficient)
    ]
    if not pieces:
        return b.const(0.0)
    return _chain(pieces, Op.ADD)


# --- (b) factor cancellation ----------------------------------------------


class _Product:
    """A product ``coefficient * prod(shape ** exponent)``."""

    def __init__(self) -> None:
        self.coefficient = 1.0
        self.factors: List[Tuple[ExpressionTree, int]] = []
        self.had_constant = False

    def scale(self, weight: float, exponent: int) -> bool:
        if exponent > 0:
            self.coefficient *= weight
            return True
        if weight == 0.0:
            return False
        self.coefficient /= weight
        return True


def _flatten_product(
    tree: ExpressionTree, position: int, exponent: int, product: _Product
) -> bool:
    node = tree.nodes[position]
    if not product.scale(tree.weights[position], exponent):
        return False
    if node.op in (Op.MUL, Op.DIV):
        left, right = tree.children(position)
        inner = exponent if node.op is Op.MUL else -exponent
        return _flatten_product(tree, left, exponent, product) and _flatten_product(
            tree, right, inner, product
        )
    if node.op is Op.CONST:
        product.had_constant = True
    else:
        product.factors.append((_normalized(tree, position), exponent))
    return True


def _product_of(tree: ExpressionTree, position: int) -> Optional[_Product]:
    if tree.nodes[position].op not in (Op.MUL, Op.DIV):
        return None
    product = _Product()
    if not _flatten_product(tree, position, 1, product):
        return None
    if not math.isfinite(product.coefficient):
        return None
    return product


def _net_exponents(factors: List[Tuple[ExpressionTree, int]]) -> Dict[Shape, List]:
    net: Dict[Shape, List] = {}
    for shape, exponent in factors:
        entry = net.setdefault(_key(shape), [0, shape, 0])
        entry[0] += exponent
        entry[2] += 1
    return net


def _build_product(
    coefficient: float, net: Dict[Shape, List]
) -> ExpressionTree:
    numerator: List[ExpressionTree] = []
    denominator: List[ExpressionTree] = []
    for exponent, shape, _ in net.values():
        target = numerator if exponent > 0 else denominator
        target.extend([shape] * abs(exponent))
    if not denominator:
        if not numerator:
            return b.const(coefficient)
        return _chain(numerator, Op.MUL).with_root_weight(coefficient)
    top = _chain(numerator, Op.MUL) if numerator else b.const(1.0)
    return b.div(top, _chain(denominator, Op.MUL), weight=coefficient)


def cancel_factors(tree: ExpressionTree, position: int) -> Optional[ExpressionTree]:
    """Cancel shared factors and absorb constants: ``(x * 1) / x -> 1``."""
    product = _product_of(tree, position)
    if product is None:
        return None
    net = _net_exponents(product.factors)
    cancels = any(abs(exponent) < count for exponent, _, count in net.values())
    if not cancels and not product.had_constant:
        return None
    return _build_product(product.coefficient, net)


# --- (c) exponent combination ---------------------------------------------


def _reduce_log_exp(tree: ExpressionTree, position: int) -> Optional[ExpressionTree]:
    inner = position + 1
    if tree.nodes[inner].op is not Op.EXP:
        return None
    log_weight = tree.weights[position]
    exp_weight = tree.weights[inner]
    if exp_weight <= 0.0:
        return None
    argument = tree.subtree(inner + 1)
    if exp_weight == 1.0:
        return argument.with_root_weight(log_weight * argument.weights[0])
    return b.add(argument, b.const(math.log(exp_weight)), weight=log_weight)


def combine_exponents(
    tree: ExpressionTree, position: int
) -> Optional[ExpressionTree]:
    """``exp(a) * exp(b) -> exp(a + b)``, ``exp(a) / exp(b) -> exp(a - b)`` and
    ``log(exp(a)) -> a``."""
    if tree.nodes[position].op is Op.LOG:
        return _reduce_log_exp(tree, position)
    product = _product_of(tree, position)
    if product is None:
        return None
    exponentials = [(s, e) for s, e in product.factors if s.nodes[0].op is Op.EXP]
    if len(exponentials) < 2:
        return None
    arguments = []
    for shape, exponent in exponentials:
        argument = shape.subtree(1)
        if exponent < 0:
            argument = argument.with_root_weight(-argument.weights[0])
        arguments.append(argument)
    merged = b.exp(_chain(arguments, Op.ADD))
    others = [(s, e) for s, e in product.factors if s.nodes[0].op is not Op.EXP]
    return _build_product(product.coefficient, _net_exponents(others + [(merged, 1)]))


RULE_FAMILIES = (collect_terms, cancel_factors, combine_exponents)
