"""Fixtures shared by unit and integration tests."""

import json
import os

import pytest


@pytest.fixture
def tiny_experiment_file(tmp_path):
    """Write a two-trial experiment config and return its path."""
    document = {
        "run": {
            "method": "drsr",
            "loss": "medae",
            "budget": 200,
            "population_size": 6,
            "seed": 11,
            "dataset": {"kind": "mixture", "n": 20, "seed": 2},
            "archive": {"clusters": 2},
            "es": {"population": 4, "generations": 2},
            "record_interval": 6,
            "probe_count": 8,
        },
        "trials": 2,
    }
    path = os.path.join(str(tmp_path), "experiment.json")
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(document, handle)
    return path
