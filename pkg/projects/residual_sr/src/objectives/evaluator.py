"""Budget-counting evaluation of trees against a dataset."""

from dataclasses import dataclass
from typing import List, Optional, Union

import numpy as np

from ..datasets.models import Dataset
from ..expression import ExpressionTree, evaluate_weight_matrix
from .budget import EvaluationBudget
from .losses import LossKind, fitness_from_loss, loss_from_residuals


@dataclass(frozen=True)
class Evaluation:
    """A tree together with its residuals, loss and fitness."""

    tree: ExpressionTree
    residuals: np.ndarray
    loss: float
    fitness: float


class ExpressionEvaluator:
    """Evaluates trees on one dataset with one loss, charging a budget."""

    def __init__(
        self,
        dataset: Dataset,
        loss_kind: Union[LossKind, str],
        budget: Optional[EvaluationBudget] = None,
    ):
        """Initialize the evaluator.

        Args:
            dataset: Dataset every evaluation runs against
            loss_kind: Loss used for fitness
            budget: Budget charged once per evaluation; unlimited if None
        """
        self.dataset = dataset
        self.loss_kind = LossKind(loss_kind)
        self.budget = budget

    def _charge(self, count: int) -> None:
        if self.budget is not None:
            self.budget.consume(count)

    def can_afford(self, count: int = 1) -> bool:
        return self.budget is None or self.budget.can_afford(count)

    def _wrap(self, tree: ExpressionTree, residuals: np.ndarray) -> Evaluation:
        loss_value = loss_from_residuals(self.loss_kind, residuals)
        return Evaluation(
            tree=tree,
            residuals=residuals,
            loss=loss_value,
            fitness=fitness_from_loss(loss_value),
        )

    def evaluate(self, tree: ExpressionTree) -> Evaluation:
        """Evaluate one tree, consuming one unit of budget."""
        self._charge(1)
        batch = evaluate_weight_matrix(
            tree, tree.weights_vector()[None, :], self.dataset.inputs
        )
        return self._wrap(tree, batch.residuals(self.dataset.targets)[0])

    def evaluate_weights(
        self, tree: ExpressionTree, weights: np.ndarray
    ) -> List[Evaluation]:
        """Evaluate ``tree``'s structure under each row of ``weights``.

        Consumes one unit of budget per row. Results keep row order.
        """
        weights = np.atleast_2d(np.asarray(weights, dtype=float))
        self._charge(weights.shape[0])
        batch = evaluate_weight_matrix(tree, weights, self.dataset.inputs)
        all_residuals = batch.residuals(self.dataset.targets)
        return [
            self._wrap(tree.with_weights(row_weights), all_residuals[row])
            for row, row_weights in enumerate(weights)
        ]
