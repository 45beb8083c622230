"""k-means over the rescaled input–output space."""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple, Union

import numpy as np
from scipy.spatial.distance import cdist

from ..datasets.models import Dataset
from ..exceptions import ClusteringError

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 300

Seed = Union[int, np.random.Generator, np.random.SeedSequence]


@dataclass(frozen=True)
class ClusterAssignment:
    """Fixed partition of the dataset rows into ``k`` clusters.

    Attributes:
        labels: Cluster index per row
        k: Number of clusters
        centroids: ``(k, d + 1)`` centroids in rescaled space
        scale_min: Per-dimension minimum used for rescaling
        scale_max: Per-dimension maximum used for rescaling
        sse_history: Within-cluster SSE after each Lloyd update
    """

    labels: np.ndarray
    k: int
    centroids: np.ndarray = field(default_factory=lambda: np.empty((0, 0)))
    scale_min: np.ndarray = field(default_factory=lambda: np.empty(0))
    scale_max: np.ndarray = field(default_factory=lambda: np.empty(0))
    sse_history: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        labels = np.asarray(self.labels, dtype=np.int64).reshape(-1)
        if labels.size and (labels.min() < 0 or labels.max() >= self.k):
            raise ClusteringError(f"Cluster labels must lie in [0, {self.k})")
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return int(self.labels.shape[0])

    def sizes(self) -> np.ndarray:
        """Row count per cluster."""
        return np.bincount(self.labels, minlength=self.k)


def rescale_points(points: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Map every column to ``[0, 1]``; constant columns map to 0.5.

    Returns:
        Tuple of (rescaled points, column minima, column maxima)
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    low = points.min(axis=0)
    high = points.max(axis=0)
    span = high - low
    constant = span == 0.0
    scaled = (points - low) / np.where(constant, 1.0, span)
    scaled[:, constant] = 0.5
    return scaled, low, high


def rescale(dataset: Dataset) -> np.ndarray:
    """Rescaled ``[x | y]`` points of ``dataset`` in ``[0, 1]^(d+1)``."""
    return rescale_points(np.column_stack([dataset.inputs, dataset.targets]))[0]


def _kmeans_plusplus(
    points: np.ndarray, k: int, rng: np.random.Generator
) -> np.ndarray:
    n = points.shape[0]
    centroids = np.empty((k, points.shape[1]))
    centroids[0] = points[rng.integers(0, n)]
    closest = cdist(points, centroids[:1], "sqeuclidean")[:, 0]
    for index in range(1, k):
        total = closest.sum()
        if total > 0.0:
            chosen = rng.choice(n, p=closest / total)
        else:
            chosen = rng.integers(0, n)
        centroids[index] = points[chosen]
        distances = cdist(points, centroids[index : index + 1], "sqeuclidean")[:, 0]
        closest = np.minimum(closest, distances)
    return centroids


def _reseed_empty(
    points: np.ndarray, labels: np.ndarray, centroids: np.ndarray, distances: np.ndarray
) -> None:
    k = centroids.shape[0]
    own = distances[np.arange(points.shape[0]), labels]
    for cluster in range(k):
        if np.any(labels == cluster):
            continue
        sizes = np.bincount(labels, minlength=k)
        donors = sizes[labels] > 1
        candidates = np.where(donors, own, -1.0)
        farthest = int(np.argmax(candidates))
        logger.debug("Re-seeding empty cluster %d at row %d", cluster, farthest)
        labels[farthest] = cluster
        centroids[cluster] = points[farthest]
        own[farthest] = 0.0


def _sse(points: np.ndarray, labels: np.ndarray, centroids: np.ndarray) -> float:
    return float(np.sum((points - centroids[labels]) ** 2))


def kmeans(points: np.ndarray, k: int, seed: Seed = 0) -> ClusterAssignment:
    """Lloyd's algorithm with k-means++ seeding.

    Nearest-centroid ties go to the lowest index. An empty cluster is
    re-seeded at the point farthest from its own centroid. Iteration stops
    when assignments are stable or after 300 rounds.

    Args:
        points: ``(n, m)`` points, usually already rescaled
        k: Number of clusters
        seed: Seed or generator for the k-means++ draws

    Raises:
        ClusteringError: If there are fewer points than clusters
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    n = points.shape[0]
    if k < 1 or n < k:
        raise ClusteringError(f"Need 1 <= k <= n, got k={k}, n={n}")
    rng = np.random.default_rng(seed)
    centroids = _kmeans_plusplus(points, k, rng)

    labels = None
    history: List[float] = []
    for iteration in range(MAX_ITERATIONS):
        distances = cdist(points, centroids, "sqeuclidean")
        new_labels = np.argmin(distances, axis=1)
        _reseed_empty(points, new_labels, centroids, distances)
        if labels is not None and np.array_equal(new_labels, labels):
            break
        labels = new_labels
        centroids = np.vstack([points[labels == j].mean(axis=0) for j in range(k)])
        history.append(_sse(points, labels, centroids))
    else:
        logger.warning("k-means stopped after %d iterations", MAX_ITERATIONS)

    logger.debug("k-means converged after %d iterations", iteration + 1)
    return ClusterAssignment(
        labels=labels,
        k=k,
        centroids=centroids,
        scale_min=np.zeros(points.shape[1]),
        scale_max=np.ones(points.shape[1]),
        sse_history=tuple(history),
    )


def cluster_dataset(dataset: Dataset, k: int = 10, seed: Seed = 0) -> ClusterAssignment:
    """Rescale ``dataset`` and cluster its input–output points."""
    scaled, low, high = rescale_points(
        np.column_stack([dataset.inputs, dataset.targets])
    )
    assignment = kmeans(scaled, k, seed)
    logger.info(
        "Clustered %d rows into %d clusters (sizes %s)",
        dataset.n,
        k,
        assignment.sizes().tolist(),
    )
    return ClusterAssignment(
        labels=assignment.labels,
        k=k,
        centroids=assignment.centroids,
        scale_min=low,
        scale_max=high,
        sse_history=assignment.sse_history,
    )
