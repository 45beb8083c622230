"""Behavior descriptors: outlier cluster, representation and transcendental power."""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..clustering import ClusterAssignment
from ..datasets.models import Dataset
from ..expression import ExpressionTree
from ..objectives import residuals as compute_residuals


@dataclass(frozen=True)
class ArchiveBounds:
    """Grid extent per descriptor (inclusive integer ranges)."""

    clusters: int = 10
    rep_range: Tuple[int, int] = (1, 20)
    trans_range: Tuple[int, int] = (0, 4)

    def validate(self) -> None:
        """Validate bounds.

        Raises:
            ValueError: If any range is empty
        """
        if self.clusters < 1:
            raise ValueError("clusters must be >= 1")
        for name, (low, high) in (
            ("rep_range", self.rep_range),
            ("trans_range", self.trans_range),
        ):
            if low > high:
                raise ValueError(f"{name} is empty: [{low}, {high}]")

    @property
    def shape(self) -> Tuple[int, int, int]:
        return (
            self.clusters,
            self.rep_range[1] - self.rep_range[0] + 1,
            self.trans_range[1] - self.trans_range[0] + 1,
        )

    @property
    def total_cells(self) -> int:
        return int(np.prod(self.shape))


@dataclass(frozen=True, order=True)
class BehaviorDescriptor:
    """Archive coordinates of an expression."""

    out_cluster: int
    rep_power: int
    trans_count: int


def _clamp(value: int, bounds: Tuple[int, int]) -> int:
    return max(bounds[0], min(bounds[1], value))


def outlier_cluster_from_residuals(
    residual_values: np.ndarray, labels: np.ndarray, k: int
) -> int:
    """Cluster with the largest mean absolute residual; ties go to the lowest
    index and empty clusters count as mean 0."""
    magnitudes = np.abs(residual_values)
    best_cluster, best_mean = 0, -1.0
    for cluster in range(k):
        members = magnitudes[labels == cluster]
        mean = math.fsum(members.tolist()) / members.size if members.size else 0.0
        if mean > best_mean:
            best_cluster, best_mean = cluster, mean
    return best_cluster


def outlier_cluster_index(
    tree: ExpressionTree, dataset: Dataset, assignment: ClusterAssignment
) -> int:
    """Outlier-cluster descriptor of ``tree`` on ``dataset``."""
    return outlier_cluster_from_residuals(
        compute_residuals(tree, dataset), assignment.labels, assignment.k
    )


def describe_from_residuals(
    tree: ExpressionTree,
    residual_values: np.ndarray,
    assignment: ClusterAssignment,
    bounds: ArchiveBounds = ArchiveBounds(),
) -> BehaviorDescriptor:
    """Descriptor from precomputed residuals, clamped into ``bounds``."""
    return BehaviorDescriptor(
        out_cluster=outlier_cluster_from_residuals(
            residual_values, assignment.labels, assignment.k
        ),
        rep_power=_clamp(tree.node_count, bounds.rep_range),
        trans_count=_clamp(tree.transcendental_count, bounds.trans_range),
    )


def describe(
    tree: ExpressionTree,
    dataset: Dataset,
    assignment: ClusterAssignment,
    bounds: ArchiveBounds = ArchiveBounds(),
) -> BehaviorDescriptor:
    """Full descriptor of ``tree`` on ``dataset``."""
    return describe_from_residuals(
        tree, compute_residuals(tree, dataset), assignment, bounds
    )
