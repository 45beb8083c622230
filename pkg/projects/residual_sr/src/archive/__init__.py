"""Behavior descriptors and the MAP-Elites grid archive."""

from .descriptors import (
    ArchiveBounds,
    BehaviorDescriptor,
    describe,
    describe_from_residuals,
    outlier_cluster_from_residuals,
    outlier_cluster_index,
)
from .grid_archive import Elite, GridArchive, archive_select_two, archive_update
from .io import export_archive, load_archive

__all__ = [
    "ArchiveBounds",
    "BehaviorDescriptor",
    "Elite",
    "GridArchive",
    "archive_select_two",
    "archive_update",
    "describe",
    "describe_from_residuals",
    "export_archive",
    "load_archive",
    "outlier_cluster_from_residuals",
    "outlier_cluster_index",
]
