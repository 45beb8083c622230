"""Unit tests for cross-trial aggregation."""

import os
import shutil
import tempfile
import unittest

import pytest

from projects.residual_sr.src.apps import (
    aggregate_directory,
    aggregate_trials,
    bootstrap_ci,
)
from projects.residual_sr.src.apps.aggregate import (
    SUMMARY_COLUMNS,
    carry_forward,
    load_trial,
    trial_directories,
)
from projects.residual_sr.src.exceptions import TraceError
from projects.residual_sr.src.file_operations import (
    CSVArtifactWriter,
    read_csv_rows,
    read_meta,
)


class TestBootstrap(unittest.TestCase):
    """Test the percentile bootstrap."""

    def test_identical_values(self):
        assert bootstrap_ci([0.4, 0.4, 0.4]) == (0.4, 0.4, 0.4)

    def test_interval_brackets_mean(self):
        mean, low, high = bootstrap_ci([0.1, 0.5, 0.9, 0.3])
        assert mean == pytest.approx(0.45)
        assert 0.1 <= low <= mean <= high <= 0.9

    def test_order_independent(self):
        assert bootstrap_ci([3.0, 1.0, 2.0]) == bootstrap_ci([1.0, 2.0, 3.0])

    def test_empty(self):
        with pytest.raises(TraceError):
            bootstrap_ci([])


class TestAlignment(unittest.TestCase):
    """Test carry-forward alignment and trial aggregation."""

    def test_carry_forward(self):
        series = [(10, 1.0), (20, 2.0)]
        assert carry_forward(series, [5, 10, 15, 20, 25]) == [1.0, 1.0, 1.0, 2.0, 2.0]

    def test_aggregate_trials(self):
        trials = [
            {"best_fitness": [(0, 0.1), (10, 0.5)], "coverage": [(0, 0.01)]},
            {"best_fitness": [(0, 0.3), (20, 0.7)]},
        ]
        rows = aggregate_trials(trials)
        assert {row.metric for row in rows} == {"best_fitness"}
        assert [row.evaluations for row in rows] == [0, 10, 20]
        assert [row.mean for row in rows] == pytest.approx([0.2, 0.4, 0.6])
        assert all(row.trials == 2 for row in rows)

    def test_single_trial_rejected(self):
        with pytest.raises(TraceError):
            aggregate_trials([{"best_fitness": [(0, 0.1)]}])


class TestAggregateDirectory(unittest.TestCase):
    """Test reading trial directories and writing the summary."""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        writer = CSVArtifactWriter(["generation", "evaluations", "value"])
        for trial, values in enumerate(([0.2, 0.6], [0.4, 0.8])):
            directory = os.path.join(self.temp_dir, f"trial_{trial}")
            path = os.path.join(directory, "trace_best_fitness.csv")
            rows = [(0, 0, values[0]), (1, 50, values[1])]
            writer.write(rows, path, {"config_hash": f"h{trial}", "seed": trial})

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_discovers_trials(self):
        directories = trial_directories(self.temp_dir)
        assert [os.path.basename(d) for d in directories] == ["trial_0", "trial_1"]
        assert load_trial(directories[0]) == {"best_fitness": [(0, 0.2), (50, 0.6)]}

    def test_summary_file(self):
        output = os.path.join(self.temp_dir, "summary.csv")
        rows = aggregate_directory(self.temp_dir, output)
        assert [row.mean for row in rows] == pytest.approx([0.3, 0.7])
        written = read_csv_rows(output)
        assert tuple(written[0]) == SUMMARY_COLUMNS
        assert written[1]["evaluations"] == "50"
        assert read_meta(output) == {"config_hash": "h0,h1", "seed": "0,1"}

    def test_malformed_trace(self):
        path = os.path.join(self.temp_dir, "trial_0", "trace_coverage.csv")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write("generation,evaluations,value\n0,zero,0.1\n")
        with pytest.raises(TraceError):
            load_trial(os.path.dirname(path))

    def test_too_few_trials(self):
        shutil.rmtree(os.path.join(self.temp_dir, "trial_1"))
        with pytest.raises(TraceError):
            aggregate_directory(self.temp_dir, os.path.join(self.temp_dir, "s.csv"))
