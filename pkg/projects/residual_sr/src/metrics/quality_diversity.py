"""Accuracy, coverage, QD-Score and 2-D hypervolume."""

from typing import Iterable, Sequence, Tuple

from ..archive import GridArchive
from ..datasets.models import Dataset
from ..exceptions import DatasetError
from ..expression import ExpressionTree
from ..objectives import LossKind, fitness

HV_REFERENCE = (0.0, 20.0)


def subset_accuracy(tree: ExpressionTree, subset: Dataset) -> float:
    """Fitness transform of MSE restricted to ``subset``.

    Raises:
        DatasetError: If the subset is empty
    """
    if subset.n < 1:
        raise DatasetError("Accuracy needs a non-empty subset")
    return fitness(LossKind.MSE, tree, subset)


def coverage(archive: GridArchive) -> float:
    """Fraction of occupied cells."""
    return archive.occupied_count / archive.total_cells


def qd_score(archive: GridArchive) -> float:
    """Sum of elite fitness divided by the total number of cells."""
    return sum(elite.fitness for elite in archive.elites()) / archive.total_cells


def hypervolume(
    points: Iterable[Tuple[float, float]],
    ref: Sequence[float] = HV_REFERENCE,
) -> float:
    """Area dominated by ``(fitness, node_count)`` points, fitness maximized
    and node count minimized, bounded by ``ref = (fitness_ref, nodes_ref)``.

    Points at or beyond the reference in either objective add nothing.
    Sweeps points by fitness descending, accumulating rectangles.
    """
    ref_fitness, ref_nodes = float(ref[0]), float(ref[1])
    ordered = sorted(
        ((float(f), float(n)) for f, n in points if f > ref_fitness),
        key=lambda point: (-point[0], point[1]),
    )
    area = 0.0
    best_nodes = ref_nodes
    for index, (point_fitness, point_nodes) in enumerate(ordered):
        best_nodes = min(best_nodes, point_nodes)
        next_fitness = (
            ordered[index + 1][0] if index + 1 < len(ordered) else ref_fitness
        )
        area += (point_fitness - next_fitness) * (ref_nodes - best_nodes)
    return area
