"""Offspring pipeline shared by the search loops.

crossover -> per-child mutation -> simplification -> evaluation -> ES.
"""

import logging
from typing import List, Optional, Sequence

from ..archive import GridArchive
from ..expression import ExpressionTree
from ..objectives import Evaluation
from ..optimizers import (
    CandidateSink,
    CoefficientOptimizer,
    CoefficientResult,
    archive_sink,
)
from ..variation import ramped_half_and_half, subtree_crossover, subtree_mutation
from .context import RunContext

logger = logging.getLogger(__name__)


class OffspringPipeline:
    """Produces, evaluates and tunes offspring within one run context."""

    def __init__(self, context: RunContext):
        """Initialize the pipeline.

        Args:
            context: Run context providing operators, evaluator and RNG
        """
        self.context = context

    def initial_trees(self) -> List[ExpressionTree]:
        """Ramped half-and-half population of the configured size."""
        variation = self.context.variation
        return ramped_half_and_half(
            self.context.config.population_size,
            self.context.rng,
            n_features=self.context.dataset.d,
            limits=variation.limits,
            min_depth=variation.init_min_depth,
            max_depth=variation.init_max_depth,
        )

    def evaluate_initial(
        self, trees: Sequence[ExpressionTree], sink: Optional[CandidateSink] = None
    ) -> List[Evaluation]:
        """Evaluate trees in order until the budget runs out."""
        evaluated = []
        for tree in trees:
            if not self.context.evaluator.can_afford(1):
                logger.warning(
                    "Budget exhausted during initialization after %d individuals",
                    len(evaluated),
                )
                break
            evaluation = self.context.evaluator.evaluate(tree)
            if sink is not None:
                sink(evaluation)
            evaluated.append(evaluation)
        return evaluated

    def breed(
        self, parent1: ExpressionTree, parent2: ExpressionTree
    ) -> List[ExpressionTree]:
        """Two simplified children of the given parents."""
        context = self.context
        children = subtree_crossover(parent1, parent2, context.rng, context.variation)
        mutated = [
            subtree_mutation(child, context.rng, context.dataset.d, context.variation)
            for child in children
        ]
        return [context.simplifier.simplify(child) for child in mutated]

    def refine(
        self, child: ExpressionTree, sink: Optional[CandidateSink] = None
    ) -> Optional[CoefficientResult]:
        """Evaluate ``child`` then tune its weights with the ES.

        The child's own evaluation and every ES sample go to ``sink``.

        Returns:
            None if not even the child's evaluation fits the budget
        """
        if not self.context.evaluator.can_afford(1):
            return None
        evaluation = self.context.evaluator.evaluate(child)
        if sink is not None:
            sink(evaluation)
        optimizer = CoefficientOptimizer(self.context.evaluator, self.context.es, sink)
        return optimizer.optimize(evaluation, self.context.rng)

    def archive_sink(self, archive: GridArchive) -> CandidateSink:
        return archive_sink(archive, self.context.assignment)
