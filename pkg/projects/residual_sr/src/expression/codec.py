"""Canonical text form of expression trees.

Format: ``(label w=<weight> <children...>)`` where the weight is written with
the shortest round-trip float representation, e.g.
``(add w=1.0 (var0 w=2.5) (const1 w=1.0))``.
"""

import re
from typing import List

from ..exceptions import ExpressionParseError
from .models import ExpressionTree, Node, Op

_TOKEN = re.compile(r"\(|\)|[^\s()]+")
_LABELS = {op.value: op for op in Op if op is not Op.VAR}


def to_text(tree: ExpressionTree) -> str:
    """Serialize ``tree`` to canonical text."""
    parts: List[str] = []
    closers: List[int] = []
    for node, weight in zip(tree.nodes, tree.weights):
        if parts:
            parts.append(" ")
        parts.append(f"({node.label} w={float(weight)!r}")
        closers.append(node.arity)
        while closers and closers[-1] == 0:
            closers.pop()
            parts.append(")")
            if closers:
                closers[-1] -= 1
    return "".join(parts)


def _parse_label(label: str) -> Node:
    if label in _LABELS:
        return Node(_LABELS[label])
    match = re.fullmatch(r"var(\d+)", label)
    if match is None:
        raise ExpressionParseError(f"Unknown node label: {label!r}")
    return Node.var(int(match.group(1)))


def from_text(text: str) -> ExpressionTree:
    """Parse canonical text back into a tree.

    Raises:
        ExpressionParseError: If the text is malformed
    """
    tokens = _TOKEN.findall(text)
    nodes: List[Node] = []
    weights: List[float] = []

    def parse(position: int) -> int:
        if position + 2 >= len(tokens) or tokens[position] != "(":
            raise ExpressionParseError(f"Expected '(' at token {position}")
        node = _parse_label(tokens[position + 1])
        weight_token = tokens[position + 2]
        if not weight_token.startswith("w="):
            raise ExpressionParseError(f"Expected weight, got {weight_token!r}")
        try:
            weight = float(weight_token[2:])
        except ValueError as exc:
            raise ExpressionParseError(f"Bad weight {weight_token!r}") from exc
        nodes.append(node)
        weights.append(weight)
        position += 3
        for _ in range(node.arity):
            position = parse(position)
        if position >= len(tokens) or tokens[position] != ")":
            raise ExpressionParseError(f"Expected ')' at token {position}")
        return position + 1

    end = parse(0)
    if end != len(tokens):
        raise ExpressionParseError("Trailing tokens after expression")
    try:
        return ExpressionTree(tuple(nodes), tuple(weights))
    except ValueError as exc:
        raise ExpressionParseError(str(exc)) from exc


def to_infix(tree: ExpressionTree, position: int = 0) -> str:
    """Human-readable infix rendering, weights shown only when not 1."""
    node = tree.nodes[position]
    weight = tree.weights[position]
    if node.op is Op.VAR:
        body = f"x{node.index}"
    elif node.op is Op.CONST:
        return f"{weight:g}"
    elif node.arity == 1:
        body = f"{node.op.value}({to_infix(tree, position + 1)})"
    else:
        left, right = (to_infix(tree, child) for child in tree.children(position))
        symbol = {Op.ADD: "+", Op.SUB: "-", Op.MUL: "*", Op.DIV: "/"}[node.op]
        body = f"({left} {symbol} {right})"
    return body if weight == 1.0 else f"{weight:g}*{body}"

