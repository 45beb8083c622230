"""Loss landscape over two weights of a fixed expression structure."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ..datasets.models import Dataset
from ..expression import ExpressionTree, evaluate_weight_matrix
from ..objectives import LossKind, loss_from_residuals

logger = logging.getLogger(__name__)

CHUNK_ROWS = 1024


@dataclass(frozen=True)
class LandscapeGrid:
    """Loss values on a ``len(values_a) x len(values_b)`` weight grid."""

    index_a: int
    index_b: int
    values_a: np.ndarray
    values_b: np.ndarray
    losses: np.ndarray

    def rows(self) -> List[Tuple[float, float, float]]:
        """``(w_a, w_b, loss)`` rows, ``w_a`` varying slowest."""
        return [
            (float(a), float(b), float(self.losses[i, j]))
            for i, a in enumerate(self.values_a)
            for j, b in enumerate(self.values_b)
        ]

    def argmin(self) -> Tuple[float, float]:
        """Grid point with the lowest loss; the first in row order wins ties."""
        i, j = np.unravel_index(int(np.argmin(self.losses)), self.losses.shape)
        return float(self.values_a[i]), float(self.values_b[j])


def loss_landscape(
    tree: ExpressionTree,
    dataset: Dataset,
    loss_kind: LossKind,
    indices: Tuple[int, int],
    values_a: Sequence[float],
    values_b: Sequence[float],
) -> LandscapeGrid:
    """Evaluate the loss with weights ``indices`` swept over a grid.

    All other weights keep their values in ``tree``. Evaluations here do not
    count against any search budget.

    Raises:
        ValueError: If an index is outside the tree or both indices are equal
    """
    index_a, index_b = indices
    if index_a == index_b or not all(0 <= i < tree.node_count for i in indices):
        raise ValueError(
            f"Invalid weight indices {indices} for {tree.node_count} nodes"
        )
    values_a = np.asarray(values_a, dtype=float)
    values_b = np.asarray(values_b, dtype=float)

    grid_a, grid_b = np.meshgrid(values_a, values_b, indexing="ij")
    weights = np.tile(tree.weights_vector(), (grid_a.size, 1))
    weights[:, index_a] = grid_a.ravel()
    weights[:, index_b] = grid_b.ravel()

    losses = np.empty(grid_a.size)
    for start in range(0, grid_a.size, CHUNK_ROWS):
        block = weights[start : start + CHUNK_ROWS]
        outcome = evaluate_weight_matrix(tree, block, dataset.inputs)
        residuals = outcome.residuals(dataset.targets)
        for offset, row in enumerate(residuals):
            losses[start + offset] = loss_from_residuals(loss_kind, row)

    logger.info("Computed %d landscape points", grid_a.size)
    return LandscapeGrid(
        index_a, index_b, values_a, values_b, losses.reshape(grid_a.shape)
    )
