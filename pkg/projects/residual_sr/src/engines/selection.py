"""Parent and survivor selection for the population-based baselines."""

from typing import List, Sequence, Tuple

import numpy as np

from ..objectives import Evaluation


def tournament_select(
    population: Sequence[Evaluation], size: int, rng: np.random.Generator
) -> Evaluation:
    """Fittest of ``size`` uniform draws with replacement; the earliest draw
    wins ties."""
    draws = rng.integers(len(population), size=size)
    winner = int(draws[0])
    for index in draws[1:]:
        if population[int(index)].fitness > population[winner].fitness:
            winner = int(index)
    return population[winner]


def _best_index(population: Sequence[Evaluation]) -> int:
    return max(range(len(population)), key=lambda i: (population[i].fitness, -i))


def sr_next_generation(
    current: Sequence[Evaluation], offspring: Sequence[Evaluation], size: int
) -> List[Evaluation]:
    """Offspring minus their single worst, plus the current best.

    When fewer offspring were produced, the rest is filled with the best
    remaining current individuals so the population keeps ``size``.
    """
    survivors = list(offspring)
    if survivors:
        worst = min(range(len(survivors)), key=lambda i: (survivors[i].fitness, i))
        del survivors[worst]
    best = _best_index(current)
    survivors.append(current[best])
    if len(survivors) < size:
        rest = sorted(
            (i for i in range(len(current)) if i != best),
            key=lambda i: (-current[i].fitness, i),
        )
        survivors.extend(current[i] for i in rest[: size - len(survivors)])
    return survivors[:size]


def objectives(population: Sequence[Evaluation]) -> np.ndarray:
    """Minimization view: ``(-fitness, node_count)`` per individual."""
    return np.array(
        [(-ind.fitness, float(ind.tree.node_count)) for ind in population],
        dtype=float,
    ).reshape(-1, 2)


def dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    """Whether ``a`` Pareto-dominates ``b`` under minimization."""
    a, b = np.asarray(a), np.asarray(b)
    return bool(np.all(a <= b) and np.any(a < b))


def fast_non_dominated_sort(values: np.ndarray) -> List[List[int]]:
    """Fronts of indices, best first; indices ascend within each front."""
    values = np.asarray(values, dtype=float)
    n = values.shape[0]
    if n == 0:
        return []
    no_worse = np.all(values[:, None, :] <= values[None, :, :], axis=2)
    better = np.any(values[:, None, :] < values[None, :, :], axis=2)
    dominance = no_worse & better
    counts = dominance.sum(axis=0)
    fronts = []
    current = [i for i in range(n) if counts[i] == 0]
    while current:
        fronts.append(current)
        following = []
        for i in current:
            for j in np.flatnonzero(dominance[i]):
                counts[j] -= 1
                if counts[j] == 0:
                    following.append(int(j))
        current = sorted(following)
    return fronts


def crowding_distance(values: np.ndarray) -> np.ndarray:
    """Crowding distance within one front; boundary points get infinity."""
    values = np.asarray(values, dtype=float)
    n, m = values.shape
    distances = np.zeros(n)
    if n <= 2:
        distances[:] = np.inf
        return distances
    for column in range(m):
        order = np.argsort(values[:, column], kind="stable")
        ordered = values[order, column]
        distances[order[0]] = distances[order[-1]] = np.inf
        span = ordered[-1] - ordered[0]
        if span > 0:
            distances[order[1:-1]] += (ordered[2:] - ordered[:-2]) / span
    return distances


def rank_and_crowding(values: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Front rank and crowding distance per individual."""
    n = values.shape[0]
    ranks = np.zeros(n, dtype=int)
    crowding = np.zeros(n)
    for rank, front in enumerate(fast_non_dominated_sort(values)):
        ranks[front] = rank
        crowding[front] = crowding_distance(values[front])
    return ranks, crowding


def crowded_tournament(
    ranks: np.ndarray, crowding: np.ndarray, rng: np.random.Generator
) -> int:
    """Binary tournament: lower rank wins, then larger crowding distance."""
    first, second = (int(i) for i in rng.integers(len(ranks), size=2))
    if ranks[second] < ranks[first] or (
        ranks[second] == ranks[first] and crowding[second] > crowding[first]
    ):
        return second
    return first


def environmental_selection(values: np.ndarray, size: int) -> List[int]:
    """Indices of the ``size`` survivors: whole fronts first, then the last
    front truncated by crowding distance (ties by index)."""
    selected: List[int] = []
    for front in fast_non_dominated_sort(values):
        if len(selected) + len(front) <= size:
            selected.extend(front)
            continue
        distances = crowding_distance(values[front])
        ordered = sorted(range(len(front)), key=lambda i: (-distances[i], front[i]))
        selected.extend(front[i] for i in ordered[: size - len(selected)])
        break
    return selected
