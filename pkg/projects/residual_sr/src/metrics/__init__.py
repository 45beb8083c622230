"""Run quality metrics and loss landscapes."""

from .landscape import LandscapeGrid, loss_landscape
from .quality_diversity import (
    HV_REFERENCE,
    coverage,
    hypervolume,
    qd_score,
    subset_accuracy,
)

__all__ = [
    "HV_REFERENCE",
    "LandscapeGrid",
    "coverage",
    "hypervolume",
    "loss_landscape",
    "qd_score",
    "subset_accuracy",
]
