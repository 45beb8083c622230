"""Unit tests for the suite runner and the mass-luminosity report scripts."""

import os
import shutil
import tempfile
import unittest
from unittest.mock import patch

import pytest

import projects.residual_sr.scripts.mass_luminosity_report as report
import projects.residual_sr.scripts.run_suite as run_suite
from projects.residual_sr.src.apps.experiment_app import write_transforms
from projects.residual_sr.src.archive import BehaviorDescriptor, Elite, export_archive
from projects.residual_sr.src.datasets import Dataset, transform
from projects.residual_sr.src.expression import builders as b
from projects.residual_sr.src.file_operations import ArtifactWriterFactory

SCRIPT_PATH = "projects.residual_sr.scripts.run_suite"


class TestRunSuite(unittest.TestCase):
    """Test config discovery and orchestration."""

    def test_config_paths_filter(self):
        """All configs are found; ``only`` keeps the named ones."""
        assert len(run_suite.config_paths()) == 77
        names = [p.stem for p in run_suite.config_paths(["mixture_sr", "nope"])]
        assert names == ["mixture_sr"]

    def test_config_paths_patterns(self):
        """Patterns select a slice of the Nguyen grid."""
        names = [p.stem for p in run_suite.config_paths(["nguyen1_drsr_*_n20"])]
        assert names == [
            "nguyen1_drsr_mae_n20",
            "nguyen1_drsr_medae_n20",
            "nguyen1_drsr_mse_n20",
        ]

    @patch("builtins.print")
    @patch(f"{SCRIPT_PATH}.aggregate_directory")
    @patch(f"{SCRIPT_PATH}.ExperimentApp")
    @patch(f"{SCRIPT_PATH}.SettingsManager")
    def test_runs_and_aggregates(self, mock_settings, mock_app, mock_aggregate, _):
        """Each selected config is run into its output_dir, then summarized."""
        written = run_suite.run_suite(jobs=3, only=["nguyen7_drsr_medae_n20"])

        expected_dir = "runs/nguyen/nguyen7_drsr_medae_n20"
        mock_settings.assert_called_once_with(load_env=True)
        experiment = mock_app.return_value.run.call_args.args[0]
        assert experiment.run.dataset.name == "nguyen-7"
        mock_app.return_value.run.assert_called_once_with(
            experiment, expected_dir, jobs=3
        )
        summary = os.path.join(expected_dir, "summary.csv")
        mock_aggregate.assert_called_once_with(expected_dir, summary)
        assert written == [summary]


class TestMassLuminosityReport(unittest.TestCase):
    """Test affine elite extraction from a finished run."""

    def setUp(self):
        """One trial directory with an affine, a non-affine and a log elite."""
        self.run_dir = tempfile.mkdtemp()
        trial_dir = os.path.join(self.run_dir, "trial_0")
        dataset = Dataset(
            inputs=[[0.0], [1.0]],
            targets=[0.0, 4.0],
            input_names=("log_M",),
            target_name="log_L",
        )
        dataset = transform(dataset, "minmax01")
        write_transforms(dataset, os.path.join(trial_dir, "transforms.json"), {})
        ArtifactWriterFactory.create_csv_writer(
            ["generation", "evaluations", "value"]
        ).write([(0, 10, 0.5)], os.path.join(trial_dir, "trace_coverage.csv"))
        elites = [
            Elite(
                b.add(b.var(0, 0.5), b.const(0.25)),
                0.9,
                0.1,
                BehaviorDescriptor(2, 3, 0),
            ),
            Elite(b.mul(b.var(0), b.var(0)), 0.95, 0.05, BehaviorDescriptor(1, 3, 0)),
            Elite(b.log(b.var(0)), 0.99, 0.01, BehaviorDescriptor(0, 2, 1)),
        ]
        export_archive(elites, os.path.join(trial_dir, "archive.jsonl"))

    def tearDown(self):
        """Remove the run directory."""
        shutil.rmtree(self.run_dir)

    def test_only_affine_elites_reported(self):
        """The affine elite maps to ``log L = 2 log M + 1``."""
        rows = list(report.affine_report(self.run_dir))
        assert len(rows) == 1
        trial, elite, relation, classical = rows[0]
        assert trial == "trial_0"
        assert elite.descriptor.out_cluster == 2
        assert relation.slope == pytest.approx(2.0)
        assert relation.intercept == pytest.approx(1.0)
        assert classical.domain == "ultra low"

    @patch("builtins.print")
    def test_print_report(self, mock_print):
        """A header line and one line per affine elite are printed."""
        report.print_report(self.run_dir)
        lines = [c.args[0] for c in mock_print.call_args_list]
        assert len(lines) == 2
        assert "log L = 2.000 log M + 1.000" in lines[1]
        assert "ultra low" in lines[1]
