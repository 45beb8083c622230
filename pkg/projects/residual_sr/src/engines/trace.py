"""Run traces: per-generation metric records and the final snapshot."""

import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..archive import ArchiveBounds, Elite, GridArchive, describe_from_residuals
from ..clustering import ClusterAssignment
from ..datasets.models import Dataset
from ..expression import ExpressionTree
from ..file_operations import ArtifactWriterFactory
from ..metrics import coverage, hypervolume, qd_score, subset_accuracy
from ..objectives import Evaluation

logger = logging.getLogger(__name__)

TRACE_COLUMNS = ("generation", "evaluations", "value")
BASE_METRICS = ("best_fitness", "coverage", "qd_score", "hypervolume")


@dataclass(frozen=True)
class TraceRecord:
    """Metrics observed at one generation boundary.

    ``best_accuracy`` holds per-label accuracy of the best-fitness tree;
    ``max_accuracy`` the highest per-label accuracy over the maintained set.
    """

    generation: int
    evaluations: int
    best_fitness: float
    coverage: float
    qd_score: float
    hypervolume: float
    best_accuracy: Mapping[str, float] = field(default_factory=dict)
    max_accuracy: Mapping[str, float] = field(default_factory=dict)

    def metrics(self) -> Dict[str, float]:
        """Flat ``name -> value`` view used for CSV export."""
        values = {name: float(getattr(self, name)) for name in BASE_METRICS}
        for label, value in self.best_accuracy.items():
            values[f"accuracy_best_{label}"] = float(value)
        for label, value in self.max_accuracy.items():
            values[f"accuracy_max_{label}"] = float(value)
        return values


@dataclass
class RunTrace:
    """Records of one run plus the final archive or population snapshot."""

    method: str
    seed: int
    config_hash: str
    records: List[TraceRecord] = field(default_factory=list)
    snapshot: List[Elite] = field(default_factory=list)
    evaluations: int = 0

    @property
    def final(self) -> Optional[TraceRecord]:
        return self.records[-1] if self.records else None

    def metric_names(self) -> List[str]:
        """Metric names in first-seen order across records."""
        names: Dict[str, None] = {}
        for record in self.records:
            names.update(dict.fromkeys(record.metrics()))
        return list(names)

    def series(self, name: str) -> List[Tuple[int, int, float]]:
        """``(generation, evaluations, value)`` rows for one metric."""
        return [
            (record.generation, record.evaluations, record.metrics()[name])
            for record in self.records
            if name in record.metrics()
        ]

    def meta(self) -> Dict[str, Any]:
        return {
            "config_hash": self.config_hash,
            "seed": self.seed,
            "method": self.method,
        }

    def write_csvs(self, directory: str) -> List[str]:
        """Write ``trace_<metric>.csv`` per metric; returns the paths."""
        os.makedirs(directory, exist_ok=True)
        writer = ArtifactWriterFactory.create_csv_writer(TRACE_COLUMNS)
        paths = []
        for name in self.metric_names():
            path = os.path.join(directory, f"trace_{name}.csv")
            writer.write(self.series(name), path, self.meta())
            paths.append(path)
        logger.info("Wrote %d trace files to %s", len(paths), directory)
        return paths


def archive_from_population(
    population: Sequence[Evaluation],
    assignment: ClusterAssignment,
    bounds: ArchiveBounds,
) -> GridArchive:
    """Temporary archive filled from evaluated individuals with the normal
    update rule."""
    archive = GridArchive(bounds)
    for individual in population:
        descriptor = describe_from_residuals(
            individual.tree, individual.residuals, assignment, bounds
        )
        archive.update(individual.tree, individual.fitness, descriptor, individual.loss)
    return archive


def record_snapshot(
    generation: int,
    evaluations: int,
    archive: GridArchive,
    points: Sequence[Tuple[float, float]],
    best_fitness: float,
    best_tree: Optional[ExpressionTree],
    maintained: Sequence[ExpressionTree],
    dataset: Dataset,
) -> TraceRecord:
    """Compute one trace record.

    Accuracy computations evaluate subsets directly and are not charged to
    the search budget.
    """
    best_accuracy: Dict[str, float] = {}
    max_accuracy: Dict[str, float] = {}
    for label in dataset.label_names:
        subset = dataset.subset(label)
        if best_tree is not None:
            best_accuracy[label] = subset_accuracy(best_tree, subset)
        if maintained:
            max_accuracy[label] = max(
                subset_accuracy(tree, subset) for tree in maintained
            )
    record = TraceRecord(
        generation=generation,
        evaluations=evaluations,
        best_fitness=best_fitness,
        coverage=coverage(archive),
        qd_score=qd_score(archive),
        hypervolume=hypervolume(points),
        best_accuracy=best_accuracy,
        max_accuracy=max_accuracy,
    )
    logger.info(
        "gen=%d evals=%d best=%.6f coverage=%.4f qd=%.5f hv=%.4f",
        generation,
        evaluations,
        record.best_fitness,
        record.coverage,
        record.qd_score,
        record.hypervolume,
    )
    return record
