"""Per-run state shared by all search engines."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..archive import ArchiveBounds
from ..clustering import ClusterAssignment, cluster_dataset, load_assignment
from ..config import RunConfig, build_dataset
from ..datasets.models import Dataset
from ..expression import TreeLimits
from ..objectives import EvaluationBudget, ExpressionEvaluator
from ..optimizers import EsConfig
from ..simplification import ExpressionSimplifier
from ..tracking import NoOpProgressTracker, ProgressTracker
from ..variation import VariationConfig

logger = logging.getLogger(__name__)


@dataclass
class RunContext:
    """Everything a search loop needs, built once per run.

    The three generators are independent streams spawned from the run seed:
    clustering, simplifier probes and the search itself.
    """

    config: RunConfig
    dataset: Dataset
    assignment: ClusterAssignment
    budget: EvaluationBudget
    evaluator: ExpressionEvaluator
    simplifier: ExpressionSimplifier
    variation: VariationConfig
    es: EsConfig
    bounds: ArchiveBounds
    rng: np.random.Generator
    progress: ProgressTracker

    @property
    def limits(self) -> TreeLimits:
        return self.variation.limits

    @property
    def config_hash(self) -> str:
        return self.config.config_hash()


def build_context(
    config: RunConfig,
    dataset: Optional[Dataset] = None,
    progress: Optional[ProgressTracker] = None,
) -> RunContext:
    """Prepare dataset, clustering, evaluator and RNG streams for ``config``.

    Args:
        config: Validated run configuration
        dataset: Prebuilt dataset; built from ``config.dataset`` when omitted
        progress: Receives consumed evaluations

    Raises:
        DatasetError: If the dataset cannot be built
        ClusteringError: If clustering fails or an injected assignment is bad
    """
    dataset = dataset if dataset is not None else build_dataset(config.dataset)
    progress = progress or NoOpProgressTracker()
    cluster_seed, probe_seed, search_seed = np.random.SeedSequence(config.seed).spawn(3)

    bounds = config.archive.bounds()
    if config.archive.assignment_path:
        assignment = load_assignment(
            config.archive.assignment_path, dataset.n, bounds.clusters
        )
    else:
        assignment = cluster_dataset(dataset, bounds.clusters, seed=cluster_seed)

    variation = config.operators.variation()
    variation.validate()
    budget = EvaluationBudget(config.budget, on_consume=progress.update)
    simplifier = ExpressionSimplifier.from_dataset(
        dataset,
        np.random.default_rng(probe_seed),
        count=config.probe_count,
        limits=variation.limits,
    )
    logger.info(
        "Prepared %s run: n=%d d=%d clusters=%d budget=%d seed=%d",
        config.method,
        dataset.n,
        dataset.d,
        bounds.clusters,
        config.budget,
        config.seed,
    )
    return RunContext(
        config=config,
        dataset=dataset,
        assignment=assignment,
        budget=budget,
        evaluator=ExpressionEvaluator(dataset, config.loss, budget),
        simplifier=simplifier,
        variation=variation,
        es=config.es.config(),
        bounds=bounds,
        rng=np.random.default_rng(search_seed),
        progress=progress,
    )
