"""Experiment orchestration: trials, artifacts and logging setup."""

import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from ..archive import export_archive
from ..clustering import save_assignment
from ..config import AppSettings, ExperimentConfig, RunConfig
from ..datasets.models import Dataset
from ..engines import RunTrace, build_context
from ..factories import SearchEngineFactory
from ..file_operations import ArtifactWriterFactory
from ..tracking import ProgressTracker, ProgressTrackerFactory

logger = logging.getLogger(__name__)

PACKAGE_LOGGER = "projects.residual_sr"


@dataclass(frozen=True)
class TrialSummary:
    """Outcome of one trial, small enough to return from a worker process."""

    trial: int
    seed: int
    directory: str
    evaluations: int
    best_fitness: float
    coverage: float
    elites: int


def trial_directory(output_dir: str, trial: int) -> str:
    return os.path.join(output_dir, f"trial_{trial}")


def write_dataset(dataset: Dataset, path: str, meta: Dict[str, Any]) -> None:
    """Dataset snapshot with a ``label`` column."""
    columns = list(dataset.input_names) + [dataset.target_name, "label"]
    labels = dataset.labels if dataset.labels is not None else [""] * dataset.n
    rows = [
        [float(v) for v in inputs] + [float(target), str(label)]
        for inputs, target, label in zip(dataset.inputs, dataset.targets, labels)
    ]
    ArtifactWriterFactory.create_csv_writer(columns).write(rows, path, meta)


def write_transforms(dataset: Dataset, path: str, meta: Dict[str, Any]) -> None:
    """Transform records with the column roles needed to invert them."""
    full_meta = {
        **meta,
        "inputs": list(dataset.input_names),
        "target": dataset.target_name,
    }
    records = [record.to_dict() for record in dataset.transforms]
    ArtifactWriterFactory.create_json_writer().write(records, path, full_meta)


def run_trial(
    config: RunConfig,
    trial: int,
    output_dir: str,
    progress: Optional[ProgressTracker] = None,
) -> TrialSummary:
    """Run one trial and write its artifacts under ``trial_<k>``.

    The trial's seed is the configured seed plus ``trial``.
    """
    trial_config = config.for_trial(trial)
    context = build_context(trial_config, progress=progress)
    engine = SearchEngineFactory.create_engine(trial_config.method)
    logger.info(
        "Trial %d started (method=%s seed=%d)",
        trial,
        trial_config.method,
        trial_config.seed,
    )
    trace: RunTrace = engine.run(context)

    directory = trial_directory(output_dir, trial)
    meta = trace.meta()
    trace.write_csvs(directory)
    export_archive(trace.snapshot, os.path.join(directory, "archive.jsonl"), meta)
    write_dataset(context.dataset, os.path.join(directory, "dataset.csv"), meta)
    write_transforms(context.dataset, os.path.join(directory, "transforms.json"), meta)
    save_assignment(context.assignment, os.path.join(directory, "clusters.csv"), meta)

    final = trace.final
    summary = TrialSummary(
        trial=trial,
        seed=trial_config.seed,
        directory=directory,
        evaluations=trace.evaluations,
        best_fitness=final.best_fitness if final else 0.0,
        coverage=final.coverage if final else 0.0,
        elites=len(trace.snapshot),
    )
    logger.info(
        "Trial %d finished: best=%.6f coverage=%.4f evaluations=%d",
        trial,
        summary.best_fitness,
        summary.coverage,
        summary.evaluations,
    )
    return summary


def _run_trial_quietly(config: RunConfig, trial: int, output_dir: str) -> TrialSummary:
    progress = ProgressTrackerFactory.create_noop_tracker()
    return run_trial(config, trial, output_dir, progress)


class ExperimentApp:
    """Runs the trials of one experiment config and writes their artifacts."""

    def __init__(self, settings: AppSettings):
        """Initialize the application.

        Args:
            settings: Ambient settings (logging, progress display)
        """
        self.settings = settings
        self.logger = self._setup_logging()

    def _setup_logging(self) -> logging.Logger:
        """Set up logging configuration.

        Returns:
            Configured logger instance
        """
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )
        handlers: List[logging.Handler] = [logging.StreamHandler(sys.stdout)]
        if self.settings.log_file:
            handlers.append(logging.FileHandler(self.settings.log_file))
        for handler in handlers:
            handler.setFormatter(formatter)

        app_logger = logging.getLogger("residual_sr")
        for configured in (app_logger, logging.getLogger(PACKAGE_LOGGER)):
            configured.setLevel(self.settings.numeric_log_level)
            for handler in configured.handlers[:]:
                configured.removeHandler(handler)
            for handler in handlers:
                configured.addHandler(handler)
            configured.propagate = False
        return app_logger

    def run(
        self,
        experiment: ExperimentConfig,
        output_dir: str,
        jobs: int = 1,
    ) -> List[TrialSummary]:
        """Run every trial, sequentially or in a process pool.

        Results come back in trial order regardless of ``jobs``.
        """
        config = experiment.run
        self.logger.info(
            "Starting %d %s trials (hash %s) into %s with %d jobs",
            experiment.trials,
            config.method,
            config.config_hash(),
            output_dir,
            jobs,
        )
        os.makedirs(output_dir, exist_ok=True)
        trials = range(experiment.trials)
        show_progress = self.settings.show_progress
        trial_bar = ProgressTrackerFactory.create(show_progress, unit="trials")
        trial_bar.start(experiment.trials, f"{config.method} trials")
        summaries: List[TrialSummary] = []
        try:
            if jobs <= 1:
                for trial in trials:
                    progress = ProgressTrackerFactory.create(
                        show_progress, unit="evals", position=1, leave=False
                    )
                    summaries.append(run_trial(config, trial, output_dir, progress))
                    trial_bar.update(1)
            else:
                with ProcessPoolExecutor(max_workers=jobs) as pool:
                    futures = [
                        pool.submit(_run_trial_quietly, config, trial, output_dir)
                        for trial in trials
                    ]
                    for future in futures:
                        summaries.append(future.result())
                        trial_bar.update(1)
        finally:
            trial_bar.close()

        self.logger.info("Completed %d trials", len(summaries))
        return summaries
