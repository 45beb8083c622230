"""Coefficient optimization with CMA-ES."""

from .cmaes import EsConfig, EsState, StrategyParameters, es_ask, es_init, es_tell
from .coefficients import (
    CandidateSink,
    CoefficientOptimizer,
    CoefficientResult,
    archive_sink,
    optimize_coefficients,
)

__all__ = [
    "CandidateSink",
    "CoefficientOptimizer",
    "CoefficientResult",
    "EsConfig",
    "EsState",
    "StrategyParameters",
    "archive_sink",
    "es_ask",
    "es_init",
    "es_tell",
    "optimize_coefficients",
]
