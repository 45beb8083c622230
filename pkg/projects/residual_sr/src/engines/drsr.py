"""Diversified residual search: MAP-Elites over behavior descriptors."""

import logging
from typing import Optional

from ..archive import GridArchive
from ..config import RunConfig
from ..datasets.models import Dataset
from ..tracking import ProgressTracker
from .context import RunContext, build_context
from .interfaces import SearchEngine
from .pipeline import OffspringPipeline
from .trace import RunTrace, record_snapshot

logger = logging.getLogger(__name__)


class DrsrEngine(SearchEngine):
    """Archive-driven loop.

    Parents are two uniformly drawn elites. Each child is evaluated once,
    offered to the archive, then tuned by the ES whose every sample is also
    offered. The returned ES best is not used further.
    """

    def get_engine_name(self) -> str:
        return "drsr"

    def _record(self, context: RunContext, archive: GridArchive, generation: int):
        elites = archive.elites()
        best = archive.best()
        return record_snapshot(
            generation=generation,
            evaluations=context.budget.used,
            archive=archive,
            points=[(elite.fitness, elite.tree.node_count) for elite in elites],
            best_fitness=best.fitness if best is not None else 0.0,
            best_tree=best.tree if best is not None else None,
            maintained=[elite.tree for elite in elites],
            dataset=context.dataset,
        )

    def run(self, context: RunContext) -> RunTrace:
        config = context.config
        trace = RunTrace(self.get_engine_name(), config.seed, context.config_hash)
        archive = GridArchive(context.bounds)
        pipeline = OffspringPipeline(context)
        offer = pipeline.archive_sink(archive)
        interval = config.trace_interval
        offspring = 0

        context.progress.start(config.budget, f"drsr seed={config.seed}")
        try:
            pipeline.evaluate_initial(pipeline.initial_trees(), offer)
            trace.records.append(self._record(context, archive, 0))

            recorded_at = context.budget.used
            while not context.budget.exhausted:
                first, second = archive.select_two(context.rng)
                for child in pipeline.breed(first.tree, second.tree):
                    if pipeline.refine(child, offer) is None:
                        break
                    offspring += 1
                    if offspring % interval == 0:
                        trace.records.append(
                            self._record(context, archive, offspring // interval)
                        )
                        recorded_at = context.budget.used
                        context.progress.set_postfix(
                            {
                                "best": f"{trace.records[-1].best_fitness:.4f}",
                                "cells": archive.occupied_count,
                            }
                        )
            if recorded_at != context.budget.used:
                trace.records.append(
                    self._record(context, archive, -(-offspring // interval))
                )
        finally:
            context.progress.close()

        trace.snapshot = archive.elites()
        trace.evaluations = context.budget.used
        logger.info(
            "drsr finished: %d offspring, %d evaluations, %d elites",
            offspring,
            trace.evaluations,
            archive.occupied_count,
        )
        return trace


def run_drsr(
    config: RunConfig,
    dataset: Optional[Dataset] = None,
    progress: Optional[ProgressTracker] = None,
) -> RunTrace:
    """Run the archive-driven search for ``config``."""
    return DrsrEngine().run(build_context(config, dataset, progress))
