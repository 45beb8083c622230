"""Progress tracking module."""

from .progress import (
    NoOpProgressTracker,
    ProgressTracker,
    ProgressTrackerFactory,
    TqdmProgressTracker,
)

__all__ = [
    "NoOpProgressTracker",
    "ProgressTracker",
    "ProgressTrackerFactory",
    "TqdmProgressTracker",
]
