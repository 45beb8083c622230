"""Population-based baselines: single-objective SR and NSGA-II MOSR.

Both share the offspring pipeline with the archive-driven search; offspring
adopt their ES-tuned weights. Metrics use a temporary archive built from
the current population each generation.
"""

import logging
from abc import abstractmethod
from typing import List, Optional, Sequence

import numpy as np

from ..config import RunConfig
from ..datasets.models import Dataset
from ..objectives import Evaluation
from ..tracking import ProgressTracker
from .context import RunContext, build_context
from .interfaces import SearchEngine
from .pipeline import OffspringPipeline
from .selection import (
    crowded_tournament,
    environmental_selection,
    objectives,
    rank_and_crowding,
    sr_next_generation,
    tournament_select,
)
from .trace import RunTrace, TraceRecord, archive_from_population, record_snapshot

logger = logging.getLogger(__name__)


class GenerationalEngine(SearchEngine):
    """Generational loop with pluggable parent and survivor selection."""

    def prepare(self, population: Sequence[Evaluation]) -> None:
        """Hook run once per generation before parents are drawn."""

    @abstractmethod
    def select_parent(
        self, population: Sequence[Evaluation], context: RunContext
    ) -> Evaluation:
        """Draw one parent."""
        raise NotImplementedError

    @abstractmethod
    def next_generation(
        self,
        current: Sequence[Evaluation],
        offspring: Sequence[Evaluation],
        size: int,
    ) -> List[Evaluation]:
        """Form the next population."""
        raise NotImplementedError

    def _record(
        self, context: RunContext, population: Sequence[Evaluation], generation: int
    ) -> TraceRecord:
        archive = archive_from_population(
            population, context.assignment, context.bounds
        )
        best = max(population, key=lambda individual: individual.fitness, default=None)
        return record_snapshot(
            generation=generation,
            evaluations=context.budget.used,
            archive=archive,
            points=[(ind.fitness, ind.tree.node_count) for ind in population],
            best_fitness=best.fitness if best is not None else 0.0,
            best_tree=best.tree if best is not None else None,
            maintained=[ind.tree for ind in population],
            dataset=context.dataset,
        )

    def _breed_generation(
        self,
        population: Sequence[Evaluation],
        pipeline: OffspringPipeline,
        context: RunContext,
        size: int,
    ) -> List[Evaluation]:
        offspring: List[Evaluation] = []
        while len(offspring) < size and not context.budget.exhausted:
            first = self.select_parent(population, context)
            second = self.select_parent(population, context)
            for child in pipeline.breed(first.tree, second.tree):
                if len(offspring) == size:
                    break
                result = pipeline.refine(child)
                if result is None:
                    break
                offspring.append(result.best)
        if len(offspring) < size:
            logger.warning(
                "Budget ran out mid-generation with %d of %d offspring",
                len(offspring),
                size,
            )
        return offspring

    def run(self, context: RunContext) -> RunTrace:
        config = context.config
        name = self.get_engine_name()
        trace = RunTrace(name, config.seed, context.config_hash)
        pipeline = OffspringPipeline(context)
        size = config.population_size
        generation = 0

        context.progress.start(config.budget, f"{name} seed={config.seed}")
        try:
            population = pipeline.evaluate_initial(pipeline.initial_trees())
            trace.records.append(self._record(context, population, generation))
            while not context.budget.exhausted:
                self.prepare(population)
                offspring = self._breed_generation(population, pipeline, context, size)
                if not offspring:
                    break
                population = self.next_generation(population, offspring, size)
                generation += 1
                trace.records.append(self._record(context, population, generation))
                context.progress.set_postfix(
                    {"gen": generation, "best": f"{trace.records[-1].best_fitness:.4f}"}
                )
        finally:
            context.progress.close()

        trace.snapshot = archive_from_population(
            population, context.assignment, context.bounds
        ).elites()
        trace.evaluations = context.budget.used
        logger.info(
            "%s finished: %d generations, %d evaluations",
            name,
            generation,
            trace.evaluations,
        )
        return trace


class SrEngine(GenerationalEngine):
    """Tournament selection; offspring minus the worst plus the current best."""

    def get_engine_name(self) -> str:
        return "sr"

    def select_parent(
        self, population: Sequence[Evaluation], context: RunContext
    ) -> Evaluation:
        size = context.config.tournament_size
        return tournament_select(population, size, context.rng)

    def next_generation(
        self,
        current: Sequence[Evaluation],
        offspring: Sequence[Evaluation],
        size: int,
    ) -> List[Evaluation]:
        return sr_next_generation(current, offspring, size)


class MosrEngine(GenerationalEngine):
    """NSGA-II over (fitness max, node count min)."""

    def __init__(self):
        self._ranks = np.zeros(0, dtype=int)
        self._crowding = np.zeros(0)

    def get_engine_name(self) -> str:
        return "mosr"

    def prepare(self, population: Sequence[Evaluation]) -> None:
        self._ranks, self._crowding = rank_and_crowding(objectives(population))

    def select_parent(
        self, population: Sequence[Evaluation], context: RunContext
    ) -> Evaluation:
        return population[crowded_tournament(self._ranks, self._crowding, context.rng)]

    def next_generation(
        self,
        current: Sequence[Evaluation],
        offspring: Sequence[Evaluation],
        size: int,
    ) -> List[Evaluation]:
        combined = list(current) + list(offspring)
        survivors = environmental_selection(objectives(combined), size)
        return [combined[index] for index in survivors]


def run_sr(
    config: RunConfig,
    dataset: Optional[Dataset] = None,
    progress: Optional[ProgressTracker] = None,
) -> RunTrace:
    """Run the single-objective baseline for ``config``."""
    return SrEngine().run(build_context(config, dataset, progress))


def run_mosr(
    config: RunConfig,
    dataset: Optional[Dataset] = None,
    progress: Optional[ProgressTracker] = None,
) -> RunTrace:
    """Run the NSGA-II baseline for ``config``."""
    return MosrEngine().run(build_context(config, dataset, progress))
