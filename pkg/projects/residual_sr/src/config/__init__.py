"""Run configuration and ambient settings."""

from .run_config import (
    ArchiveSpec,
    CsvSpec,
    DatasetSpec,
    EsSpec,
    ExperimentConfig,
    MixtureSpec,
    NguyenSpec,
    OperatorSpec,
    RunConfig,
    TransformStep,
    load_experiment,
    parse_experiment,
    parse_run,
)
from .dataset_builder import build_dataset
from .settings import AppSettings, SettingsManager

__all__ = [
    "AppSettings",
    "ArchiveSpec",
    "CsvSpec",
    "DatasetSpec",
    "EsSpec",
    "ExperimentConfig",
    "MixtureSpec",
    "NguyenSpec",
    "OperatorSpec",
    "RunConfig",
    "SettingsManager",
    "TransformStep",
    "build_dataset",
    "load_experiment",
    "parse_experiment",
    "parse_run",
]
