"""CSV ingestion for real-world datasets."""

import csv
import logging
import math
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np

from ..exceptions import DatasetError
from .models import Dataset

logger = logging.getLogger(__name__)


def _data_lines(handle) -> List[str]:
    # Metadata lines written by our own exporters start with '#'
    return [line for line in handle if line.strip() and not line.startswith("#")]


def load_csv(
    path: Union[str, Path],
    x_cols: Sequence[str],
    y_col: str,
    label_col: str = "",
) -> Dataset:
    """Load selected numeric columns from a comma-separated file.

    Rows where any selected field is missing or non-numeric are skipped and
    counted; the count is logged and stored in the provenance.

    Args:
        path: CSV file with a header row
        x_cols: Input column names
        y_col: Target column name
        label_col: Optional column holding subset labels

    Returns:
        Dataset built from the valid rows

    Raises:
        DatasetError: If the file is unreadable, columns are missing or no
            valid rows remain
    """
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8", newline="") as handle:
            reader = csv.DictReader(_data_lines(handle))
            fieldnames = reader.fieldnames or []
            rows = list(reader)
    except OSError as exc:
        raise DatasetError(f"Cannot read {path}: {exc}") from exc

    wanted = list(x_cols) + [y_col] + ([label_col] if label_col else [])
    missing = [name for name in wanted if name not in fieldnames]
    if missing:
        raise DatasetError(f"{path} is missing columns {missing}")

    inputs, targets, labels = [], [], []
    skipped = 0
    for row in rows:
        try:
            values = [float(row[name]) for name in list(x_cols) + [y_col]]
        except (TypeError, ValueError):
            skipped += 1
            continue
        if not all(math.isfinite(value) for value in values):
            skipped += 1
            continue
        inputs.append(values[:-1])
        targets.append(values[-1])
        if label_col:
            labels.append(row[label_col] or "")

    if skipped:
        logger.warning("Skipped %d invalid rows while loading %s", skipped, path)
    if not targets:
        raise DatasetError(f"{path}: no valid rows")

    logger.info("Loaded %d rows from %s", len(targets), path)
    return Dataset(
        inputs=np.array(inputs, dtype=float),
        targets=np.array(targets, dtype=float),
        labels=np.array(labels) if label_col else None,
        input_names=tuple(x_cols),
        target_name=y_col,
        provenance={"kind": "csv", "path": str(path), "skipped_rows": skipped},
    )
