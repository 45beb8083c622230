"""End-to-end checks of the run -> aggregate -> query workflow.

Run with:
$ pytest tests/residual_sr/integration -m integration
"""

import filecmp
import glob
import json
import os

import pytest

from projects.residual_sr.src.apps.cli import EXIT_OK, main
from projects.residual_sr.src.archive import load_archive
from projects.residual_sr.src.file_operations import read_csv_rows, read_meta

TRIAL_ARTIFACTS = (
    "trace_best_fitness.csv",
    "trace_coverage.csv",
    "trace_qd_score.csv",
    "trace_hypervolume.csv",
    "archive.jsonl",
    "dataset.csv",
    "transforms.json",
    "clusters.csv",
)


def _run(config_path, output_dir, jobs=1):
    argv = ["run", "--config", config_path, "--out", output_dir, "--no-progress"]
    return main(argv + ["--jobs", str(jobs)])


@pytest.mark.integration
@pytest.mark.slow
class TestExperimentPipeline:
    """Full workflow on a tiny mixture experiment."""

    def test_run_writes_trial_artifacts(self, tiny_experiment_file, tmp_path):
        output_dir = str(tmp_path / "run")
        assert _run(tiny_experiment_file, output_dir) == EXIT_OK

        seeds = []
        for trial in (0, 1):
            directory = os.path.join(output_dir, f"trial_{trial}")
            for name in TRIAL_ARTIFACTS:
                assert os.path.isfile(os.path.join(directory, name)), name
            meta = read_meta(os.path.join(directory, "trace_best_fitness.csv"))
            seeds.append(meta["seed"])
            evaluations = [
                int(row["evaluations"])
                for row in read_csv_rows(
                    os.path.join(directory, "trace_best_fitness.csv")
                )
            ]
            assert evaluations == sorted(evaluations)
            assert evaluations[-1] <= 200
            assert load_archive(os.path.join(directory, "archive.jsonl"))
            assert len(read_csv_rows(os.path.join(directory, "clusters.csv"))) == 20
        assert seeds == ["11", "12"]

    def test_aggregate_and_query(self, tiny_experiment_file, tmp_path):
        output_dir = str(tmp_path / "run")
        assert _run(tiny_experiment_file, output_dir) == EXIT_OK

        summary = str(tmp_path / "summary.csv")
        assert main(["aggregate", "--in", output_dir, "--out", summary]) == EXIT_OK
        rows = read_csv_rows(summary)
        metrics = {row["metric"] for row in rows}
        assert {"best_fitness", "coverage", "qd_score", "hypervolume"} <= metrics
        assert all(row["trials"] == "2" for row in rows)
        for row in rows:
            assert float(row["ci_low"]) <= float(row["mean"]) <= float(row["ci_high"])

        archive = os.path.join(output_dir, "trial_0", "archive.jsonl")
        query_out = str(tmp_path / "query.csv")
        argv = ["query", "--archive", archive, "--rep", "1:20", "--trans", "0:4"]
        assert main(argv + ["--top", "3", "--out", query_out]) == EXIT_OK
        fitness = [float(row["fitness"]) for row in read_csv_rows(query_out)]
        assert 1 <= len(fitness) <= 3
        assert fitness == sorted(fitness, reverse=True)

    def test_parallel_trials_match_sequential(self, tiny_experiment_file, tmp_path):
        """Trial outputs do not depend on the number of worker processes."""
        sequential = str(tmp_path / "sequential")
        parallel = str(tmp_path / "parallel")
        assert _run(tiny_experiment_file, sequential, jobs=1) == EXIT_OK
        assert _run(tiny_experiment_file, parallel, jobs=2) == EXIT_OK

        compared = 0
        for path in glob.glob(os.path.join(sequential, "trial_*", "*")):
            relative = os.path.relpath(path, sequential)
            assert filecmp.cmp(path, os.path.join(parallel, relative), shallow=False)
            compared += 1
        assert compared == 2 * len(TRIAL_ARTIFACTS)

    def test_injected_clusters_reproduce_run(self, tiny_experiment_file, tmp_path):
        """Feeding a trial's own cluster file back in gives the same archive."""
        first = str(tmp_path / "first")
        assert _run(tiny_experiment_file, first) == EXIT_OK

        with open(tiny_experiment_file, encoding="utf-8") as handle:
            document = json.load(handle)
        document["trials"] = 1
        document["run"]["archive"]["assignment_path"] = os.path.join(
            first, "trial_0", "clusters.csv"
        )
        injected_config = str(tmp_path / "injected.json")
        with open(injected_config, "w", encoding="utf-8") as handle:
            json.dump(document, handle)

        second = str(tmp_path / "second")
        assert _run(injected_config, second) == EXIT_OK
        original = load_archive(os.path.join(first, "trial_0", "archive.jsonl"))
        replayed = load_archive(os.path.join(second, "trial_0", "archive.jsonl"))
        assert [e.descriptor for e in replayed] == [e.descriptor for e in original]
        assert [e.tree for e in replayed] == [e.tree for e in original]
