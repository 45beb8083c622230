"""Cross-trial aggregation of trace CSVs with bootstrap confidence intervals."""

import glob
import logging
import math
import os
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from ..exceptions import TraceError
from ..file_operations import ArtifactWriterFactory, read_csv_rows, read_meta

logger = logging.getLogger(__name__)

BOOTSTRAP_RESAMPLES = 10_000
BOOTSTRAP_SEED = 0
CONFIDENCE = 0.95
SUMMARY_COLUMNS = ("metric", "evaluations", "mean", "ci_low", "ci_high", "trials")

Series = List[Tuple[int, float]]


@dataclass(frozen=True)
class SummaryRow:
    metric: str
    evaluations: int
    mean: float
    ci_low: float
    ci_high: float
    trials: int

    def as_tuple(self) -> tuple:
        return (
            self.metric,
            self.evaluations,
            self.mean,
            self.ci_low,
            self.ci_high,
            self.trials,
        )


def bootstrap_ci(
    values: Sequence[float],
    resamples: int = BOOTSTRAP_RESAMPLES,
    seed: int = BOOTSTRAP_SEED,
    confidence: float = CONFIDENCE,
) -> Tuple[float, float, float]:
    """Mean and percentile-bootstrap interval of the mean.

    Values are sorted first so the result does not depend on input order.

    Returns:
        ``(mean, low, high)``
    """
    ordered = np.sort(np.asarray(values, dtype=float))
    if ordered.size == 0:
        raise TraceError("Cannot bootstrap an empty sample")
    if ordered[0] == ordered[-1]:
        value = float(ordered[0])
        return value, value, value
    mean = math.fsum(ordered.tolist()) / ordered.size
    rng = np.random.default_rng(seed)
    draws = ordered[rng.integers(ordered.size, size=(resamples, ordered.size))]
    means = draws.mean(axis=1)
    tail = (1.0 - confidence) / 2 * 100
    low = float(np.percentile(means, tail, method="lower"))
    high = float(np.percentile(means, 100 - tail, method="higher"))
    return mean, min(low, mean), max(high, mean)


def carry_forward(series: Series, grid: Sequence[int]) -> List[float]:
    """Value of ``series`` at each grid point: the last observation at or
    before it, or the first observation for earlier points."""
    evaluations = [point for point, _ in series]
    values = [value for _, value in series]
    positions = np.searchsorted(evaluations, grid, side="right") - 1
    return [values[max(int(position), 0)] for position in positions]


def trial_directories(root: str) -> List[str]:
    """Sorted directories under ``root`` holding trace CSVs."""
    found = {
        os.path.dirname(path)
        for path in glob.glob(os.path.join(root, "**", "trace_*.csv"), recursive=True)
    }
    return sorted(found)


def load_trial(directory: str) -> Dict[str, Series]:
    """``metric -> [(evaluations, value)]`` for one trial.

    Raises:
        TraceError: If a trace file is malformed
    """
    series: Dict[str, Series] = {}
    for path in sorted(glob.glob(os.path.join(directory, "trace_*.csv"))):
        metric = os.path.basename(path)[len("trace_") : -len(".csv")]
        try:
            rows = [
                (int(row["evaluations"]), float(row["value"]))
                for row in read_csv_rows(path)
            ]
        except (KeyError, TypeError, ValueError) as e:
            raise TraceError(f"Malformed trace file {path}: {e}") from e
        if rows:
            series[metric] = sorted(rows, key=lambda row: row[0])
    return series


def aggregate_trials(trials: Sequence[Mapping[str, Series]]) -> List[SummaryRow]:
    """Summary rows for every metric present in all trials.

    Trials are aligned on the union of their evaluation counts.

    Raises:
        TraceError: If fewer than two trials are given
    """
    if len(trials) < 2:
        raise TraceError(f"Aggregation needs at least 2 trials, got {len(trials)}")
    shared = set(trials[0])
    for trial in trials[1:]:
        shared &= set(trial)
    rows: List[SummaryRow] = []
    for metric in sorted(shared):
        grid = sorted({point for trial in trials for point, _ in trial[metric]})
        aligned = [carry_forward(trial[metric], grid) for trial in trials]
        for column, evaluations in enumerate(grid):
            mean, low, high = bootstrap_ci([values[column] for values in aligned])
            rows.append(SummaryRow(metric, evaluations, mean, low, high, len(trials)))
    return rows


def aggregate_directory(input_dir: str, output_path: str) -> List[SummaryRow]:
    """Aggregate every trial under ``input_dir`` into a summary CSV.

    Raises:
        TraceError: If fewer than two trials are found
    """
    directories = trial_directories(input_dir)
    trials = [load_trial(directory) for directory in directories]
    rows = aggregate_trials(trials)

    hashes, seeds = set(), []
    for directory in directories:
        first = sorted(glob.glob(os.path.join(directory, "trace_*.csv")))[0]
        meta = read_meta(first)
        hashes.add(meta.get("config_hash", "unknown"))
        seeds.append(str(meta.get("seed", "?")))
    meta = {"config_hash": ",".join(sorted(hashes)), "seed": ",".join(sorted(seeds))}

    writer = ArtifactWriterFactory.create_csv_writer(SUMMARY_COLUMNS)
    writer.write([row.as_tuple() for row in rows], output_path, meta)
    logger.info(
        "Aggregated %d trials into %d summary rows at %s",
        len(trials),
        len(rows),
        output_path,
    )
    return rows
