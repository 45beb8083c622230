"""Rank-based CMA-ES with default strategy parameters.

Positive recombination weights over the better half, cumulative step-size
adaptation, and rank-one plus rank-mu covariance updates.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from ..exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

MIN_EIGENVALUE = 1e-20
SIGMA_BOUNDS = (1e-300, 1e300)


@dataclass
class EsConfig:
    """Evolution strategy settings.

    Attributes:
        population: Samples per generation (lambda)
        generations: Fixed number of ask/tell rounds, no early stopping
        sigma0: Initial step size
    """

    population: int = 10
    generations: int = 20
    sigma0: float = 1.0

    def validate(self) -> None:
        """Validate configuration values.

        Raises:
            ValueError: If a value is out of range
        """
        if self.population < 2:
            raise ValueError("ES population must be >= 2")
        if self.generations < 1:
            raise ValueError("ES generations must be >= 1")
        if not self.sigma0 > 0:
            raise ValueError("ES sigma0 must be positive")


@dataclass(frozen=True)
class StrategyParameters:
    """Learning rates and recombination weights for one (dimension, lambda)."""

    dimension: int
    population: int
    mu: int
    weights: np.ndarray
    mueff: float
    cc: float
    cs: float
    c1: float
    cmu: float
    damps: float
    chi_n: float

    @classmethod
    def default(cls, dimension: int, population: int) -> "StrategyParameters":
        n = float(dimension)
        mu = population // 2
        raw = np.log(population / 2 + 0.5) - np.log(np.arange(1, mu + 1))
        weights = raw / raw.sum()
        mueff = float(weights.sum() ** 2 / np.sum(weights**2))
        c1 = 2 / ((n + 1.3) ** 2 + mueff)
        cs = (mueff + 2) / (n + mueff + 5)
        return cls(
            dimension=dimension,
            population=population,
            mu=mu,
            weights=weights,
            mueff=mueff,
            cc=(4 + mueff / n) / (n + 4 + 2 * mueff / n),
            cs=cs,
            c1=c1,
            cmu=min(1 - c1, 2 * (mueff - 2 + 1 / mueff) / ((n + 2) ** 2 + mueff)),
            damps=2 * mueff / population + 0.3 + cs,
            chi_n=math.sqrt(n) * (1 - 1 / (4 * n) + 1 / (21 * n**2)),
        )


@dataclass(frozen=True)
class EsState:
    """Distribution state between generations.

    ``eigenbasis`` and ``axis_scales`` hold the decomposition
    ``C = B diag(D**2) B^T`` used for sampling and whitening.
    """

    params: StrategyParameters
    mean: np.ndarray
    sigma: float
    covariance: np.ndarray
    path_sigma: np.ndarray
    path_c: np.ndarray
    eigenbasis: np.ndarray
    axis_scales: np.ndarray
    generation: int = 0
    evaluations: int = field(default=0)

    @property
    def dimension(self) -> int:
        return self.params.dimension


def _decompose(covariance: np.ndarray) -> tuple:
    """Symmetrize and eigendecompose, repairing non-positive eigenvalues."""
    covariance = (covariance + covariance.T) / 2
    if not np.all(np.isfinite(covariance)):
        logger.warning("Non-finite covariance; resetting to identity")
        covariance = np.eye(covariance.shape[0])
    eigenvalues, eigenbasis = np.linalg.eigh(covariance)
    if eigenvalues.min() <= MIN_EIGENVALUE:
        logger.warning(
            "Repairing degenerate covariance (min eigenvalue %.3g)", eigenvalues.min()
        )
        eigenvalues = np.maximum(eigenvalues, MIN_EIGENVALUE)
        covariance = eigenbasis @ np.diag(eigenvalues) @ eigenbasis.T
    return covariance, eigenbasis, np.sqrt(eigenvalues)


def es_init(
    mean: Sequence[float], config: EsConfig = EsConfig()
) -> EsState:
    """Fresh state centered at ``mean`` with identity covariance."""
    config.validate()
    mean = np.asarray(mean, dtype=float).copy()
    if mean.ndim != 1 or mean.size < 1:
        raise DimensionMismatchError("ES mean must be a non-empty vector")
    dimension = mean.size
    return EsState(
        params=StrategyParameters.default(dimension, config.population),
        mean=mean,
        sigma=float(config.sigma0),
        covariance=np.eye(dimension),
        path_sigma=np.zeros(dimension),
        path_c=np.zeros(dimension),
        eigenbasis=np.eye(dimension),
        axis_scales=np.ones(dimension),
    )


def es_ask(state: EsState, rng: np.random.Generator) -> np.ndarray:
    """Draw ``lambda`` samples ``m + sigma * N(0, C)`` as rows."""
    params = state.params
    z = rng.standard_normal((params.population, params.dimension))
    steps = (z * state.axis_scales) @ state.eigenbasis.T
    return state.mean + state.sigma * steps


def es_tell(
    state: EsState, candidates: np.ndarray, losses: Sequence[float]
) -> EsState:
    """Update the distribution from evaluated samples (lower loss is better).

    Ties keep candidate order.

    Raises:
        DimensionMismatchError: If shapes disagree with the state
    """
    params = state.params
    candidates = np.asarray(candidates, dtype=float)
    losses = np.asarray(losses, dtype=float)
    if candidates.shape != (params.population, params.dimension):
        raise DimensionMismatchError(
            f"Expected candidates of shape {(params.population, params.dimension)}, "
            f"got {candidates.shape}"
        )
    if losses.shape != (params.population,):
        raise DimensionMismatchError(
            f"Expected {params.population} losses, got {losses.shape}"
        )

    n = params.dimension
    order = np.argsort(losses, kind="stable")
    selected = candidates[order[: params.mu]]
    old_mean = state.mean
    mean = params.weights @ selected
    evaluations = state.evaluations + params.population

    shift = (mean - old_mean) / state.sigma
    whitened = state.eigenbasis @ ((state.eigenbasis.T @ shift) / state.axis_scales)
    path_sigma = (1 - params.cs) * state.path_sigma + math.sqrt(
        params.cs * (2 - params.cs) * params.mueff
    ) * whitened
    norm_sq = float(path_sigma @ path_sigma)
    hsig = float(
        norm_sq / n / (1 - (1 - params.cs) ** (2 * evaluations / params.population))
        < 2 + 4.0 / (n + 1)
    )
    path_c = (1 - params.cc) * state.path_c + hsig * math.sqrt(
        params.cc * (2 - params.cc) * params.mueff
    ) * shift

    c1a = params.c1 * (1 - (1 - hsig**2) * params.cc * (2 - params.cc))
    deltas = (selected - old_mean) / state.sigma
    covariance = (
        (1 - c1a - params.cmu * params.weights.sum()) * state.covariance
        + params.c1 * np.outer(path_c, path_c)
        + params.cmu * (deltas.T * params.weights) @ deltas
    )
    covariance, eigenbasis, axis_scales = _decompose(covariance)

    sigma = state.sigma * math.exp(
        min(1.0, params.cs / params.damps * (norm_sq / n - 1) / 2)
    )
    if not SIGMA_BOUNDS[0] <= sigma <= SIGMA_BOUNDS[1]:
        logger.warning("Step size %r left its valid range; clamping", sigma)
        sigma = SIGMA_BOUNDS[0] if not sigma > SIGMA_BOUNDS[0] else SIGMA_BOUNDS[1]

    return replace(
        state,
        mean=mean,
        sigma=sigma,
        covariance=covariance,
        path_sigma=path_sigma,
        path_c=path_c,
        eigenbasis=eigenbasis,
        axis_scales=axis_scales,
        generation=state.generation + 1,
        evaluations=evaluations,
    )
