"""Experiment runner, aggregation, archive query and CLI entry points."""

from .aggregate import aggregate_directory, aggregate_trials, bootstrap_ci
from .experiment_app import ExperimentApp, TrialSummary, run_trial
from .query import NormalizationRecords, QueryBox, query_archive, query_rows

__all__ = [
    "ExperimentApp",
    "NormalizationRecords",
    "QueryBox",
    "TrialSummary",
    "aggregate_directory",
    "aggregate_trials",
    "bootstrap_ci",
    "query_archive",
    "query_rows",
    "run_trial",
]
