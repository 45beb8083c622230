"""Run every example experiment config and aggregate each one.

Usage:
    python projects/residual_sr/scripts/run_suite.py [--jobs N] [--only NAME]
"""

import argparse
import fnmatch
import os
import sys
from pathlib import Path


def setup_project_path():
    """Add project root to Python path for module imports."""
    project_root = Path(__file__).parent.parent.parent.parent
    if str(project_root) not in sys.path:
        sys.path.insert(0, str(project_root))


# Setup path before any project imports
setup_project_path()

# pylint: disable=wrong-import-position
from projects.residual_sr.src.apps import ExperimentApp, aggregate_directory
from projects.residual_sr.src.config import SettingsManager, load_experiment

CONFIG_DIR = Path(__file__).parent.parent / "configs"


def config_paths(only=None):
    """Sorted example configs, subdirectories included.

    ``only`` keeps configs whose file stem matches one of its shell patterns.
    """
    paths = sorted(CONFIG_DIR.rglob("*.json"))
    if only:
        paths = [
            path
            for path in paths
            if any(fnmatch.fnmatchcase(path.stem, pattern) for pattern in only)
        ]
    return paths


def run_suite(jobs=1, only=None):
    """Run and aggregate each config; returns the summary paths written."""
    settings = SettingsManager(load_env=True).load_settings()
    app = ExperimentApp(settings)
    written = []
    for path in config_paths(only):
        experiment = load_experiment(str(path))
        output_dir = experiment.output_dir or os.path.join("runs", path.stem)
        app.run(experiment, output_dir, jobs=jobs)
        summary_path = os.path.join(output_dir, "summary.csv")
        aggregate_directory(output_dir, summary_path)
        print(f"{path.stem}: {summary_path}")
        written.append(summary_path)
    return written


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--jobs", type=int, default=1, help="Parallel trials")
    parser.add_argument(
        "--only",
        nargs="+",
        help="Config names or patterns to run, e.g. 'nguyen1_*_n20'",
    )
    args = parser.parse_args()
    if not config_paths(args.only):
        raise ValueError(f"No configs matched {args.only} in {CONFIG_DIR}")
    run_suite(jobs=args.jobs, only=args.only)
