"""Mass–luminosity helpers for the eclipsing-binary dataset.

Affine expressions found in normalized space are mapped back to a
``log L = slope * log M + intercept`` relation and compared with the
classical piecewise relations.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..expression import ExpressionTree, Op, evaluate
from .models import Dataset, TransformRecord

# Normalization constants of the catalogue export: x = (log M - min) / span
LOG_M_BOUNDS = (-0.9682, 1.4357)
LOG_L_BOUNDS = (-2.313, 5.187)


@dataclass(frozen=True)
class AffineRelation:
    """Straight line on the log M - log L plane."""

    slope: float
    intercept: float

    def __call__(self, log_m: float) -> float:
        return self.slope * log_m + self.intercept


@dataclass(frozen=True)
class ClassicalRelation:
    """Classical relation valid on ``low < log M <= high``."""

    domain: str
    low: float
    high: float
    slope: float
    intercept: float

    def contains(self, log_m: float) -> bool:
        return self.low < log_m <= self.high


CLASSICAL_RELATIONS: Tuple[ClassicalRelation, ...] = (
    ClassicalRelation("ultra low", -0.747, -0.347, 2.028, -0.976),
    ClassicalRelation("very low", -0.347, -0.143, 4.572, -0.102),
    ClassicalRelation("low", -0.143, 0.0212, 5.743, -0.007),
    ClassicalRelation("intermediate", 0.0212, 0.380, 4.329, 0.010),
    ClassicalRelation("high", 0.380, 0.845, 3.967, 0.093),
    ClassicalRelation("very high", 0.845, 1.491, 2.865, 1.105),
)


def classical_relation_for(log_m: float) -> Optional[ClassicalRelation]:
    """Classical relation covering ``log_m``, if any."""
    for relation in CLASSICAL_RELATIONS:
        if relation.contains(log_m):
            return relation
    return None


def affine_coefficients(
    tree: ExpressionTree, position: int = 0
) -> Optional[Tuple[float, float]]:
    """Return ``(a, b)`` with ``tree(x) == a * x0 + b``, or None if not affine.

    Only single-input trees are recognized. Products of two non-constant
    parts, divisions by non-constants and transcendental functions of
    ``x0`` are not affine.
    """
    node = tree.nodes[position]
    weight = tree.weights[position]
    if node.op is Op.VAR:
        return (weight, 0.0) if node.index == 0 else None
    if node.op is Op.CONST:
        return (0.0, weight)

    parts = [affine_coefficients(tree, child) for child in tree.children(position)]
    if any(part is None for part in parts):
        return None
    if node.op is Op.LOG or node.op is Op.EXP:
        if parts[0][0] != 0.0:
            return None
        outcome = evaluate(tree.subtree(position), [0.0])
        return None if outcome.flagged else (0.0, outcome.value)

    (a1, b1), (a2, b2) = parts
    if node.op is Op.ADD:
        return (weight * (a1 + a2), weight * (b1 + b2))
    if node.op is Op.SUB:
        return (weight * (a1 - a2), weight * (b1 - b2))
    if node.op is Op.MUL:
        if a1 != 0.0 and a2 != 0.0:
            return None
        if a1 == 0.0:
            return (weight * b1 * a2, weight * b1 * b2)
        return (weight * a1 * b2, weight * b1 * b2)
    if a2 != 0.0 or b2 == 0.0:
        return None
    return (weight * a1 / b2, weight * b1 / b2)


def _minmax_record(dataset: Dataset, column: str) -> TransformRecord:
    for record in dataset.transforms:
        if record.column == column and record.spec == "minmax01":
            return record
    raise ValueError(f"Column {column!r} has no minmax01 transform record")


def relation_from_normalized(
    a: float,
    b: float,
    x_bounds: Tuple[float, float] = LOG_M_BOUNDS,
    y_bounds: Tuple[float, float] = LOG_L_BOUNDS,
) -> AffineRelation:
    """Convert ``y = a x + b`` in normalized space to the log-log plane."""
    x_low, x_high = x_bounds
    y_low, y_high = y_bounds
    x_span = x_high - x_low
    y_span = y_high - y_low
    return AffineRelation(
        slope=y_span * a / x_span,
        intercept=y_span * (b - a * x_low / x_span) + y_low,
    )


def log_plane_relation(
    tree: ExpressionTree, dataset: Dataset
) -> Optional[AffineRelation]:
    """Relation on the raw log plane for an affine ``tree``, using the
    dataset's recorded minmax01 parameters. Returns None if not affine.

    Raises:
        ValueError: If the dataset lacks minmax01 records for x or y
    """
    coefficients = affine_coefficients(tree)
    if coefficients is None:
        return None
    x_record = _minmax_record(dataset, dataset.input_names[0])
    y_record = _minmax_record(dataset, dataset.target_name)
    return relation_from_normalized(
        *coefficients, x_bounds=x_record.params, y_bounds=y_record.params
    )
