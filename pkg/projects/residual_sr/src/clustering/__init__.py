"""k-means partition of the rescaled input–output space."""

from .assignment_io import load_assignment, save_assignment
from .kmeans import (
    MAX_ITERATIONS,
    ClusterAssignment,
    cluster_dataset,
    kmeans,
    rescale,
    rescale_points,
)

__all__ = [
    "MAX_ITERATIONS",
    "ClusterAssignment",
    "cluster_dataset",
    "kmeans",
    "load_assignment",
    "rescale",
    "rescale_points",
    "save_assignment",
]
