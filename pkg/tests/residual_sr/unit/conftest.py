"""Shared pytest fixtures for residual SR unit tests."""

import numpy as np
import pytest

from projects.residual_sr.src.datasets import Dataset
from projects.residual_sr.src.expression import builders as b


@pytest.fixture
def line_dataset():
    """Twenty noiseless points on ``y = 2x + 5``.

    Returns:
        Dataset: Single-input dataset without labels
    """
    x = np.linspace(0.0, 10.0, 20)
    return Dataset(inputs=x.reshape(-1, 1), targets=2.0 * x + 5.0)


@pytest.fixture
def affine_tree():
    """``w1 * x0 + w2`` with unit weights."""
    return b.add(b.var(0), b.const())


@pytest.fixture
def small_run_document():
    """Run config small enough for unit-level engine runs.

    Returns:
        dict: Raw run document
    """
    return {
        "method": "drsr",
        "loss": "mse",
        "budget": 240,
        "population_size": 8,
        "seed": 3,
        "dataset": {"kind": "nguyen", "name": 1, "n_base": 10, "n_noise": 5},
        "archive": {"clusters": 3},
        "es": {"population": 4, "generations": 2},
        "record_interval": 4,
        "probe_count": 8,
    }
