"""Synthetic dataset generators with built-in ground-truth expressions."""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Tuple, Union

import numpy as np

from ..exceptions import DatasetError
from ..expression import ExpressionTree, evaluate_batch
from ..expression import builders as b
from .models import Dataset

logger = logging.getLogger(__name__)

MIXTURE_LINEAR = (1.0, 0.1)  # y = a - b x
MIXTURE_LOGISTIC = (-4.0, 1.6)  # y = 1 / (1 + exp(c + d x))
MIXTURE_DOMAIN = (0.0, 10.0)


def _nguyen1() -> ExpressionTree:
    x = b.var(0)
    return b.add(b.add(b.mul(b.mul(x, x), x), b.mul(x, x)), x)


def _nguyen7() -> ExpressionTree:
    x = b.var(0)
    return b.add(
        b.log(b.add(x, b.const())),
        b.log(b.add(b.mul(x, x), b.const())),
    )


def _nguyen11() -> ExpressionTree:
    return b.exp(b.mul(b.var(1), b.log(b.var(0))))


def _nguyen12() -> ExpressionTree:
    x, y = b.var(0), b.var(1)
    x_squared = b.mul(x, x)
    return b.sub(
        b.add(
            b.sub(b.mul(x_squared, x_squared), b.mul(x_squared, x)),
            b.mul(b.mul(y, y), b.const(0.5)),
        ),
        y,
    )


def _mixture_linear() -> ExpressionTree:
    a, slope = MIXTURE_LINEAR
    return b.add(b.const(a), b.var(0, -slope))


def _mixture_logistic() -> ExpressionTree:
    c, d = MIXTURE_LOGISTIC
    return b.div(b.const(), b.add(b.const(), b.exp(b.add(b.const(c), b.var(0, d)))))


@dataclass(frozen=True)
class NguyenBenchmark:
    """One row of the Nguyen benchmark table."""

    name: str
    formula: str
    domain: Tuple[float, float]
    n_features: int
    direct: Callable[[np.ndarray], np.ndarray]
    tree_factory: Callable[[], ExpressionTree]

    def targets(self, inputs: np.ndarray) -> np.ndarray:
        """Noise-free targets, computed through the ground-truth tree."""
        outcome = evaluate_batch(self.tree_factory(), inputs)
        return np.where(outcome.flagged, self.direct(inputs), outcome.values)


NGUYEN_BENCHMARKS: Dict[str, NguyenBenchmark] = {
    "nguyen-1": NguyenBenchmark(
        "nguyen-1",
        "x^3 + x^2 + x",
        (-1.0, 1.0),
        1,
        lambda X: X[:, 0] ** 3 + X[:, 0] ** 2 + X[:, 0],
        _nguyen1,
    ),
    "nguyen-7": NguyenBenchmark(
        "nguyen-7",
        "log(x + 1) + log(x^2 + 1)",
        (0.0, 2.0),
        1,
        lambda X: np.log(X[:, 0] + 1) + np.log(X[:, 0] ** 2 + 1),
        _nguyen7,
    ),
    "nguyen-11": NguyenBenchmark(
        "nguyen-11",
        "x1^x2",
        (0.0, 1.0),
        2,
        lambda X: X[:, 0] ** X[:, 1],
        _nguyen11,
    ),
    "nguyen-12": NguyenBenchmark(
        "nguyen-12",
        "x1^4 - x1^3 + x2^2 / 2 - x2",
        (0.0, 1.0),
        2,
        lambda X: X[:, 0] ** 4 - X[:, 0] ** 3 + X[:, 1] ** 2 / 2 - X[:, 1],
        _nguyen12,
    ),
}

_GROUND_TRUTH: Dict[str, Callable[[], ExpressionTree]] = {
    **{name: bench.tree_factory for name, bench in NGUYEN_BENCHMARKS.items()},
    "mixture-linear": _mixture_linear,
    "mixture-logistic": _mixture_logistic,
}


def _benchmark_key(name: Union[str, int]) -> str:
    key = str(name).strip().lower()
    if not key.startswith("nguyen-"):
        key = f"nguyen-{key}"
    return key


def get_benchmark(name: Union[str, int]) -> NguyenBenchmark:
    """Look up a Nguyen benchmark by ``1``, ``"7"`` or ``"nguyen-12"``.

    Raises:
        DatasetError: If the name is unknown
    """
    key = _benchmark_key(name)
    if key not in NGUYEN_BENCHMARKS:
        raise DatasetError(
            f"Unknown benchmark {name!r}; choose from {sorted(NGUYEN_BENCHMARKS)}"
        )
    return NGUYEN_BENCHMARKS[key]


def ground_truth_tree(name: Union[str, int]) -> ExpressionTree:
    """Built-in weighted tree for a benchmark or mixture component.

    Args:
        name: Nguyen name or ``mixture-linear`` / ``mixture-logistic``

    Raises:
        DatasetError: If the name is unknown
    """
    key = str(name).strip().lower()
    if key in _GROUND_TRUTH:
        return _GROUND_TRUTH[key]()
    return get_benchmark(name).tree_factory()


def gen_nguyen(
    name: Union[str, int], n_base: int = 20, n_noise: int = 20, seed: int = 0
) -> Dataset:
    """Nguyen benchmark rows plus Gaussian-noise outlier rows.

    Base and noise rows draw inputs independently from the benchmark domain;
    noise rows add ``N(0, 1)`` to the target.

    Raises:
        DatasetError: If the name is unknown or counts are invalid
    """
    bench = get_benchmark(name)
    if n_base < 1 or n_noise < 0:
        raise DatasetError("n_base must be >= 1 and n_noise >= 0")
    rng = np.random.default_rng(seed)
    low, high = bench.domain
    base_x = rng.uniform(low, high, size=(n_base, bench.n_features))
    noise_x = rng.uniform(low, high, size=(n_noise, bench.n_features))
    noise = rng.standard_normal(n_noise)

    inputs = np.vstack([base_x, noise_x])
    targets = bench.targets(inputs)
    targets[n_base:] += noise
    labels = np.array(["base"] * n_base + ["noise"] * n_noise)
    logger.debug(
        "Generated %s with %d base and %d noise rows", bench.name, n_base, n_noise
    )
    return Dataset(
        inputs=inputs,
        targets=targets,
        labels=labels,
        provenance={
            "kind": "nguyen",
            "name": bench.name,
            "n_base": n_base,
            "n_noise": n_noise,
            "seed": seed,
        },
    )


def gen_mixture(n: int = 40, seed: int = 0) -> Dataset:
    """Linear/logistic mixture: each row picks a component with probability 0.5.

    Raises:
        DatasetError: If ``n < 2``
    """
    if n < 2:
        raise DatasetError("Mixture dataset needs at least 2 rows")
    rng = np.random.default_rng(seed)
    inputs = rng.uniform(*MIXTURE_DOMAIN, size=(n, 1))
    is_linear = rng.random(n) < 0.5

    linear = evaluate_batch(_mixture_linear(), inputs).values
    logistic = evaluate_batch(_mixture_logistic(), inputs).values
    return Dataset(
        inputs=inputs,
        targets=np.where(is_linear, linear, logistic),
        labels=np.where(is_linear, "linear", "logistic"),
        provenance={"kind": "mixture", "n": n, "seed": seed},
    )


def gen_contaminated_linear(
    n: int = 20,
    slope: float = 2.0,
    intercept: float = 5.0,
    fraction: float = 0.5,
    offset: float = 10.0,
    seed: int = 0,
) -> Dataset:
    """Points on a line where a fraction of rows is shifted by ``offset``.

    Rows are tagged ``clean`` or ``shifted``.

    Raises:
        DatasetError: If ``n < 2`` or ``fraction`` is outside ``[0, 1)``
    """
    if n < 2 or not 0.0 <= fraction < 1.0:
        raise DatasetError("Need n >= 2 and 0 <= fraction < 1")
    rng = np.random.default_rng(seed)
    inputs = rng.uniform(0.0, 10.0, size=(n, 1))
    shifted = np.zeros(n, dtype=bool)
    shifted[rng.permutation(n)[: int(round(fraction * n))]] = True
    targets = slope * inputs[:, 0] + intercept + np.where(shifted, offset, 0.0)
    return Dataset(
        inputs=inputs,
        targets=targets,
        labels=np.where(shifted, "shifted", "clean"),
        provenance={
            "kind": "contaminated_linear",
            "n": n,
            "slope": slope,
            "intercept": intercept,
            "fraction": fraction,
            "offset": offset,
            "seed": seed,
        },
    )
