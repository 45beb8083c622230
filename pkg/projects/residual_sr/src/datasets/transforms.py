"""Column transforms with exact inverses recorded on the dataset."""

import logging
from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import DatasetError
from .models import Dataset, TransformRecord

logger = logging.getLogger(__name__)

TRANSFORM_SPECS = ("delog10", "log10", "minmax01")


def _forward(
    spec: str, values: np.ndarray, column: str, bounds: Optional[Tuple[float, float]]
) -> Tuple[np.ndarray, TransformRecord]:
    if spec == "delog10":
        return np.power(10.0, values), TransformRecord(spec, column)
    if spec == "log10":
        if np.any(values <= 0.0):
            raise DatasetError(f"log10 needs positive values in column {column!r}")
        return np.log10(values), TransformRecord(spec, column)
    low, high = bounds if bounds is not None else (values.min(), values.max())
    low, high = float(low), float(high)
    if high == low:
        return np.full_like(values, 0.5), TransformRecord(spec, column, (low, high))
    return (values - low) / (high - low), TransformRecord(spec, column, (low, high))


def invert_values(record: TransformRecord, values: np.ndarray) -> np.ndarray:
    """Undo a single recorded transform on ``values``."""
    values = np.asarray(values, dtype=float)
    if record.spec == "delog10":
        return np.log10(values)
    if record.spec == "log10":
        return np.power(10.0, values)
    low, high = record.params
    if high == low:
        return np.full_like(values, low)
    return values * (high - low) + low


def transform(
    dataset: Dataset,
    spec: str,
    columns: Optional[Sequence[str]] = None,
    bounds: Optional[Mapping[str, Tuple[float, float]]] = None,
) -> Dataset:
    """Apply ``spec`` to the selected columns.

    Args:
        dataset: Source dataset
        spec: ``delog10``, ``log10`` or ``minmax01``
        columns: Column names; all inputs and the target by default
        bounds: Fixed ``(min, max)`` per column for minmax01

    Returns:
        New dataset with one transform record appended per column

    Raises:
        DatasetError: On unknown spec or column, or non-positive log10 input
    """
    if spec not in TRANSFORM_SPECS:
        raise DatasetError(f"Unknown transform {spec!r}; choose from {TRANSFORM_SPECS}")
    selected = list(columns) if columns else list(dataset.column_names)
    bounds = dict(bounds or {})
    replacements: Dict[str, np.ndarray] = {}
    records = []
    for column in selected:
        values, record = _forward(
            spec, dataset.column(column), column, bounds.get(column)
        )
        replacements[column] = values
        records.append(record)
    logger.debug("Applied %s to columns %s", spec, selected)
    return dataset.with_columns(replacements, records)


def inverse_transform(dataset: Dataset) -> Dataset:
    """Undo every recorded transform, most recent first."""
    current = {name: dataset.column(name) for name in dataset.column_names}
    for record in reversed(dataset.transforms):
        current[record.column] = invert_values(record, current[record.column])
    restored = dataset.with_columns(current, ())
    return Dataset(
        inputs=restored.inputs,
        targets=restored.targets,
        labels=restored.labels,
        input_names=restored.input_names,
        target_name=restored.target_name,
        provenance=restored.provenance,
    )


def invert_column(dataset: Dataset, column: str, values: np.ndarray) -> np.ndarray:
    """Map ``values`` from the dataset's space back to ``column``'s raw units."""
    result = np.asarray(values, dtype=float)
    for record in reversed(dataset.transforms):
        if record.column == column:
            result = invert_values(record, result)
    return result
