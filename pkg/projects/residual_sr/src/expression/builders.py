"""Small constructors for composing expression trees by hand."""

from .models import ExpressionTree, Node, Op


def compose(op: Op, *children: ExpressionTree, weight: float = 1.0) -> ExpressionTree:
    """Put ``children`` under a new ``op`` node.

    Raises:
        ValueError: If the number of children does not match the arity
    """
    if len(children) != op.arity or op is Op.VAR:
        raise ValueError(f"{op.value} takes {op.arity} children, got {len(children)}")
    nodes = (Node(op),)
    weights = (float(weight),)
    for child in children:
        nodes += child.nodes
        weights += child.weights
    return ExpressionTree(nodes, weights)


def var(index: int, weight: float = 1.0) -> ExpressionTree:
    return ExpressionTree((Node.var(index),), (weight,))


def const(weight: float = 1.0) -> ExpressionTree:
    return ExpressionTree((Node.const(),), (weight,))


def add(left: ExpressionTree, right: ExpressionTree, weight: float = 1.0):
    return compose(Op.ADD, left, right, weight=weight)


def sub(left: ExpressionTree, right: ExpressionTree, weight: float = 1.0):
    return compose(Op.SUB, left, right, weight=weight)


def mul(left: ExpressionTree, right: ExpressionTree, weight: float = 1.0):
    return compose(Op.MUL, left, right, weight=weight)


def div(left: ExpressionTree, right: ExpressionTree, weight: float = 1.0):
    return compose(Op.DIV, left, right, weight=weight)


def log(child: ExpressionTree, weight: float = 1.0):
    return compose(Op.LOG, child, weight=weight)


def exp(child: ExpressionTree, weight: float = 1.0):
    return compose(Op.EXP, child, weight=weight)
