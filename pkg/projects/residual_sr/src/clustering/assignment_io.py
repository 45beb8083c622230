"""Cluster assignment export and injection (``row_index,cluster`` CSV)."""

import logging
from typing import Any, Mapping, Optional

import numpy as np

from ..exceptions import ClusteringError
from ..file_operations import ArtifactWriterFactory, read_csv_rows
from .kmeans import ClusterAssignment

logger = logging.getLogger(__name__)

ASSIGNMENT_COLUMNS = ("row_index", "cluster")


def save_assignment(
    assignment: ClusterAssignment, path: str, meta: Optional[Mapping[str, Any]] = None
) -> None:
    """Write one ``row_index,cluster`` row per observation."""
    writer = ArtifactWriterFactory.create_csv_writer(ASSIGNMENT_COLUMNS)
    rows = [(index, int(label)) for index, label in enumerate(assignment.labels)]
    writer.write(rows, path, meta)


def load_assignment(path: str, n: int, k: Optional[int] = None) -> ClusterAssignment:
    """Load an externally computed assignment.

    Args:
        path: CSV with ``row_index,cluster`` columns
        n: Number of dataset rows the assignment must cover
        k: Cluster count; inferred as ``max(cluster) + 1`` when omitted

    Raises:
        ClusteringError: If the file is unreadable, incomplete or inconsistent
    """
    try:
        rows = read_csv_rows(path)
    except OSError as exc:
        raise ClusteringError(f"Cannot read assignment {path}: {exc}") from exc

    labels = np.full(n, -1, dtype=np.int64)
    try:
        for row in rows:
            index = int(row["row_index"])
            if not 0 <= index < n:
                raise ClusteringError(f"Row index {index} outside dataset of {n}")
            labels[index] = int(row["cluster"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ClusteringError(f"Malformed assignment file {path}: {exc}") from exc

    if np.any(labels < 0):
        missing = int(np.sum(labels < 0))
        raise ClusteringError(f"Assignment {path} leaves {missing} rows unlabeled")
    k = int(labels.max()) + 1 if k is None else k
    logger.info("Loaded cluster assignment for %d rows from %s", n, path)
    return ClusterAssignment(labels=labels, k=k)
