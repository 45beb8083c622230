"""Mass-luminosity report for a finished astronomy run.

Lists the affine elites of every trial archive as log L = a log M + b and
names the classical piecewise relation with the closest slope. Only
meaningful for runs searched on the log plane (configs/astronomy_log.json).

Usage:
    python projects/residual_sr/scripts/mass_luminosity_report.py runs/astronomy_log
"""

# pylint: disable=duplicate-code

import argparse
import os
import sys
from pathlib import Path


def setup_project_path():
    """Add project root to Python path for module imports."""
    project_root = Path(__file__).parent.parent.parent.parent
    if str(project_root) not in sys.path:
        sys.path.insert(0, str(project_root))


setup_project_path()

# pylint: disable=wrong-import-position
from projects.residual_sr.src.apps import NormalizationRecords, QueryBox, query_archive
from projects.residual_sr.src.apps.aggregate import trial_directories
from projects.residual_sr.src.archive import load_archive
from projects.residual_sr.src.datasets import (
    CLASSICAL_RELATIONS,
    affine_coefficients,
    relation_from_normalized,
)


def affine_report(run_dir, top_k=5):
    """Yield ``(trial, elite, relation, reference)`` per best affine elite.

    ``reference`` is the classical relation whose slope is closest.
    """
    for directory in trial_directories(run_dir):
        normalization = NormalizationRecords.load(
            os.path.join(directory, "transforms.json")
        )
        elites = load_archive(os.path.join(directory, "archive.jsonl"))
        box = QueryBox(rep_range=(1, 20), trans_range=(0, 0))
        affine = [
            elite
            for elite in query_archive(elites, box, len(elites))
            if affine_coefficients(elite.tree) is not None
        ]
        for elite in affine[:top_k]:
            relation = relation_from_normalized(
                *affine_coefficients(elite.tree),
                x_bounds=normalization.x.params,
                y_bounds=normalization.y.params,
            )
            reference = min(
                CLASSICAL_RELATIONS, key=lambda c, s=relation.slope: abs(c.slope - s)
            )
            yield os.path.basename(directory), elite, relation, reference


def print_report(run_dir, top_k=5):
    """Print one line per affine elite with the nearest classical slope."""
    print(f"Mass-luminosity relations in {run_dir}")
    for trial, elite, relation, classical in affine_report(run_dir, top_k):
        print(
            f"{trial} cluster={elite.descriptor.out_cluster} "
            f"fitness={elite.fitness:.4f} "
            f"log L = {relation.slope:.3f} log M + {relation.intercept:.3f} "
            f"(closest classical: {classical.domain}, slope {classical.slope:.3f})"
        )


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("run_dir", help="Output directory of an astronomy run")
    parser.add_argument("--top-k", type=int, default=5, help="Elites per trial")
    args = parser.parse_args()
    if not os.path.isdir(args.run_dir):
        raise ValueError(f"{args.run_dir} is not a directory")
    print_report(args.run_dir, args.top_k)
