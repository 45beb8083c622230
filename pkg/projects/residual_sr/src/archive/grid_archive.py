"""MAP-Elites grid archive over behavior descriptors."""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np

from ..exceptions import ArchiveEmptyError
from ..expression import ExpressionTree, from_text, to_text
from .descriptors import ArchiveBounds, BehaviorDescriptor

logger = logging.getLogger(__name__)

Cell = Tuple[int, int, int]


@dataclass(frozen=True)
class Elite:
    """Occupant of one archive cell."""

    tree: ExpressionTree
    fitness: float
    loss: float
    descriptor: BehaviorDescriptor

    def to_dict(self) -> Dict[str, Any]:
        """Archive record in export format."""
        return {
            "out_cluster": self.descriptor.out_cluster,
            "rep_power": self.descriptor.rep_power,
            "trans_count": self.descriptor.trans_count,
            "fitness": self.fitness,
            "loss": self.loss,
            "expr": to_text(self.tree),
            "weights": list(self.tree.weights),
        }

    @classmethod
    def from_dict(cls, record: Dict[str, Any]) -> "Elite":
        """Rebuild an elite from an archive record."""
        tree = from_text(record["expr"])
        if "weights" in record:
            tree = tree.with_weights(record["weights"])
        return cls(
            tree=tree,
            fitness=float(record["fitness"]),
            loss=float(record.get("loss", math.nan)),
            descriptor=BehaviorDescriptor(
                int(record["out_cluster"]),
                int(record["rep_power"]),
                int(record["trans_count"]),
            ),
        )


class GridArchive:
    """Unit-resolution grid holding at most one elite per cell.

    Replacement needs strictly higher fitness. Occupied cells are kept in
    the order they were first filled so selection is reproducible.
    """

    def __init__(self, bounds: ArchiveBounds = ArchiveBounds()):
        """Initialize an empty archive.

        Args:
            bounds: Descriptor ranges defining the grid
        """
        bounds.validate()
        self.bounds = bounds
        self._cells: Dict[Cell, Elite] = {}
        self._occupied: List[Cell] = []

    def cell_of(self, descriptor: BehaviorDescriptor) -> Cell:
        """Grid index of ``descriptor``.

        Raises:
            ValueError: If the descriptor is outside the grid
        """
        rep_low, rep_high = self.bounds.rep_range
        trans_low, trans_high = self.bounds.trans_range
        if not (
            0 <= descriptor.out_cluster < self.bounds.clusters
            and rep_low <= descriptor.rep_power <= rep_high
            and trans_low <= descriptor.trans_count <= trans_high
        ):
            raise ValueError(f"Descriptor {descriptor} outside archive bounds")
        return (
            descriptor.out_cluster,
            descriptor.rep_power - rep_low,
            descriptor.trans_count - trans_low,
        )

    def update(
        self,
        tree: ExpressionTree,
        fitness: float,
        descriptor: BehaviorDescriptor,
        loss: float = math.nan,
    ) -> bool:
        """Insert into an empty cell or replace a strictly worse elite.

        Returns:
            Whether the archive changed
        """
        cell = self.cell_of(descriptor)
        incumbent = self._cells.get(cell)
        if incumbent is not None and not fitness > incumbent.fitness:
            return False
        if incumbent is None:
            self._occupied.append(cell)
        self._cells[cell] = Elite(tree, float(fitness), float(loss), descriptor)
        return True

    def get(self, descriptor: BehaviorDescriptor) -> Optional[Elite]:
        return self._cells.get(self.cell_of(descriptor))

    def select_two(self, rng: np.random.Generator) -> Tuple[Elite, Elite]:
        """Two independent uniform draws over occupied cells.

        Raises:
            ArchiveEmptyError: If no cell is occupied
        """
        if not self._occupied:
            raise ArchiveEmptyError("Cannot select from an empty archive")
        first = self._occupied[int(rng.integers(len(self._occupied)))]
        second = self._occupied[int(rng.integers(len(self._occupied)))]
        return self._cells[first], self._cells[second]

    @property
    def occupied_count(self) -> int:
        return len(self._occupied)

    @property
    def total_cells(self) -> int:
        return self.bounds.total_cells

    def __len__(self) -> int:
        return len(self._occupied)

    def elites(self) -> List[Elite]:
        """Elites in cell order (cluster, rep, trans)."""
        return [self._cells[cell] for cell in sorted(self._cells)]

    def best(self) -> Optional[Elite]:
        """Highest-fitness elite; the earliest cell wins ties."""
        best = None
        for elite in self.elites():
            if best is None or elite.fitness > best.fitness:
                best = elite
        return best

    def fitness_grid(self) -> np.ndarray:
        """Dense array of fitness, NaN where empty."""
        grid = np.full(self.bounds.shape, np.nan)
        for cell, elite in self._cells.items():
            grid[cell] = elite.fitness
        return grid

    def to_records(self) -> List[Dict[str, Any]]:
        return [elite.to_dict() for elite in self.elites()]

    @classmethod
    def from_elites(
        cls, elites: Iterable[Elite], bounds: ArchiveBounds = ArchiveBounds()
    ) -> "GridArchive":
        """Archive filled from ``elites`` via the normal update rule."""
        archive = cls(bounds)
        for elite in elites:
            archive.update(elite.tree, elite.fitness, elite.descriptor, elite.loss)
        return archive


def archive_update(
    archive: GridArchive,
    tree: ExpressionTree,
    fitness: float,
    descriptor: BehaviorDescriptor,
) -> bool:
    """Functional form of ``GridArchive.update``."""
    return archive.update(tree, fitness, descriptor)


def archive_select_two(
    archive: GridArchive, rng: np.random.Generator
) -> Tuple[ExpressionTree, ExpressionTree]:
    """Trees of two uniformly drawn elites."""
    first, second = archive.select_two(rng)
    return first.tree, second.tree
