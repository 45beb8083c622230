"""Loss functions over residuals and the fitness transform."""

import math
from enum import Enum
from typing import Union

import numpy as np

from ..datasets.models import Dataset
from ..exceptions import DatasetError
from ..expression import ExpressionTree, evaluate_batch


class LossKind(str, Enum):
    """Supported losses."""

    MSE = "mse"
    MAE = "mae"
    MEDAE = "medae"


def residuals(tree: ExpressionTree, dataset: Dataset) -> np.ndarray:
    """Signed residuals ``y - f(x)``; flagged rows carry ``+1e6``.

    Raises:
        DatasetError: If the dataset has no rows
    """
    if dataset.n < 1:
        raise DatasetError("Cannot compute residuals on an empty dataset")
    return evaluate_batch(tree, dataset.inputs).residuals(dataset.targets)


def loss_from_residuals(kind: Union[LossKind, str], values: np.ndarray) -> float:
    """Reduce residuals to a loss.

    Sums use ``math.fsum`` so the result does not depend on summation order.
    For even ``n`` the median is the mean of the two middle values.

    Raises:
        DatasetError: If ``values`` is empty
    """
    kind = LossKind(kind)
    magnitudes = np.abs(np.asarray(values, dtype=float))
    count = magnitudes.shape[-1]
    if count == 0:
        raise DatasetError("Cannot compute a loss over zero residuals")
    if kind is LossKind.MSE:
        return math.fsum((magnitudes * magnitudes).tolist()) / count
    if kind is LossKind.MAE:
        return math.fsum(magnitudes.tolist()) / count
    return float(np.median(magnitudes))


def fitness_from_loss(loss_value: float) -> float:
    """Map a loss to ``(0, 1]`` via ``1 / (1 + loss)``."""
    return 1.0 / (1.0 + loss_value)


def loss(kind: Union[LossKind, str], tree: ExpressionTree, dataset: Dataset) -> float:
    """Loss of ``tree`` on ``dataset``."""
    return loss_from_residuals(kind, residuals(tree, dataset))


def fitness(
    kind: Union[LossKind, str], tree: ExpressionTree, dataset: Dataset
) -> float:
    """Fitness of ``tree`` on ``dataset``."""
    return fitness_from_loss(loss(kind, tree, dataset))
