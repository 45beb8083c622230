"""Constant folding of variable-free subtrees."""

import numpy as np

from ..expression import ExpressionTree, Node, evaluate_batch

_NO_INPUT = np.zeros((1, 1))


def _fold(tree: ExpressionTree, position: int) -> ExpressionTree:
    subtree = tree.subtree(position)
    if subtree.node_count == 1:
        return subtree
    if not subtree.has_variable():
        outcome = evaluate_batch(subtree, _NO_INPUT)
        if not outcome.flagged[0]:
            return ExpressionTree((Node.const(),), (float(outcome.values[0]),))
    nodes = (tree.nodes[position],)
    weights = (tree.weights[position],)
    for child in tree.children(position):
        folded = _fold(tree, child)
        nodes += folded.nodes
        weights += folded.weights
    return ExpressionTree(nodes, weights)


def constant_fold(tree: ExpressionTree) -> ExpressionTree:
    """Replace maximal variable-free subtrees by a weighted ConstOne.

    A subtree whose own evaluation would trip a guard is kept, and folding
    continues inside it. Evaluation is preserved exactly and the node count
    never grows.
    """
    return _fold(tree, 0)
