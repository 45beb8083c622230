"""CMA-ES tuning of a tree's weight vector.

Every sampled candidate is evaluated against the run's budget and handed to
an optional sink, in candidate order, before the distribution is updated.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

import numpy as np

from ..archive import GridArchive, describe_from_residuals
from ..clustering import ClusterAssignment, cluster_dataset
from ..datasets.models import Dataset
from ..expression import ExpressionTree
from ..objectives import Evaluation, ExpressionEvaluator, LossKind
from .cmaes import EsConfig, es_ask, es_init, es_tell

logger = logging.getLogger(__name__)

CandidateSink = Callable[[Evaluation], None]


@dataclass(frozen=True)
class CoefficientResult:
    """Outcome of one ES run.

    Attributes:
        best: Lowest-loss evaluation seen, the starting point included
        generations: Completed ask/tell rounds
        evaluations: Candidates evaluated
        best_history: Best-seen loss after each generation
    """

    best: Evaluation
    generations: int
    evaluations: int
    best_history: Tuple[float, ...]

    @property
    def tree(self) -> ExpressionTree:
        return self.best.tree


def archive_sink(
    archive: GridArchive, assignment: ClusterAssignment
) -> CandidateSink:
    """Sink that describes each candidate and offers it to ``archive``."""

    def offer(evaluation: Evaluation) -> None:
        descriptor = describe_from_residuals(
            evaluation.tree, evaluation.residuals, assignment, archive.bounds
        )
        archive.update(evaluation.tree, evaluation.fitness, descriptor, evaluation.loss)

    return offer


class CoefficientOptimizer:
    """Runs a fixed number of ES generations over a tree's weights."""

    def __init__(
        self,
        evaluator: ExpressionEvaluator,
        config: Optional[EsConfig] = None,
        sink: Optional[CandidateSink] = None,
    ):
        """Initialize the optimizer.

        Args:
            evaluator: Evaluator charging the run's budget
            config: ES settings
            sink: Receives every evaluated candidate
        """
        self.evaluator = evaluator
        self.config = config or EsConfig()
        self.config.validate()
        self.sink = sink

    def optimize(
        self, start: Evaluation, rng: np.random.Generator
    ) -> CoefficientResult:
        """Tune ``start.tree``'s weights from its current values.

        A generation starts only if the budget covers all of its samples.
        """
        population = self.config.population
        state = es_init(start.tree.weights_vector(), self.config)
        best = start
        history = []
        for generation in range(self.config.generations):
            if not self.evaluator.can_afford(population):
                logger.debug(
                    "ES stopped at generation %d: budget exhausted", generation
                )
                break
            candidates = es_ask(state, rng)
            evaluations = self.evaluator.evaluate_weights(start.tree, candidates)
            for evaluation in evaluations:
                if self.sink is not None:
                    self.sink(evaluation)
                if evaluation.loss < best.loss:
                    best = evaluation
            state = es_tell(state, candidates, [e.loss for e in evaluations])
            history.append(best.loss)

        logger.debug(
            "ES finished %d generations: loss %.6g -> %.6g (sigma %.3g)",
            len(history),
            start.loss,
            best.loss,
            state.sigma,
        )
        return CoefficientResult(
            best=best,
            generations=len(history),
            evaluations=len(history) * population,
            best_history=tuple(history),
        )


def optimize_coefficients(
    tree: ExpressionTree,
    dataset: Dataset,
    loss_kind: Union[LossKind, str],
    config: Optional[EsConfig] = None,
    archive: Optional[GridArchive] = None,
    rng: Optional[np.random.Generator] = None,
    assignment: Optional[ClusterAssignment] = None,
) -> ExpressionTree:
    """Standalone ES run without a budget; returns the best tree seen.

    When ``archive`` is given every candidate is offered to it. Without an
    ``assignment`` the dataset is clustered with k-means (seed 0) into the
    archive's cluster count.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    evaluator = ExpressionEvaluator(dataset, loss_kind)
    sink = None
    if archive is not None:
        if assignment is None:
            assignment = cluster_dataset(dataset, archive.bounds.clusters, seed=0)
        sink = archive_sink(archive, assignment)
    optimizer = CoefficientOptimizer(evaluator, config, sink)
    return optimizer.optimize(evaluator.evaluate(tree), rng).tree
