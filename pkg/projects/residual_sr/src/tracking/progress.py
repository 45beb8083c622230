"""Progress reporting over evaluation budgets and trial batches."""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from tqdm import tqdm  # type: ignore


class ProgressTracker(ABC):
    """Receives progress events from engines and the experiment runner."""

    @abstractmethod
    def start(self, total: int, description: str) -> None:
        """Begin a new bar of ``total`` units."""
        raise NotImplementedError

    @abstractmethod
    def update(self, n: int = 1) -> None:
        """Advance by ``n`` units."""
        raise NotImplementedError

    @abstractmethod
    def set_postfix(self, postfix: Dict[str, Any]) -> None:
        """Show current run statistics next to the bar."""
        raise NotImplementedError

    @abstractmethod
    def close(self) -> None:
        """Finish the bar."""
        raise NotImplementedError


class TqdmProgressTracker(ProgressTracker):
    """tqdm bar; evaluations are reported in batches to keep overhead low."""

    def __init__(self, unit: str = "evals", position: int = 0, leave: bool = True):
        """Initialize progress tracker.

        Args:
            unit: Unit label shown on the bar
            position: Terminal line offset, for nested bars
            leave: Keep the bar on screen after closing
        """
        self.unit = unit
        self.position = position
        self.leave = leave
        self._progress_bar: Optional[tqdm] = None

    def start(self, total: int, description: str) -> None:
        self.close()
        self._progress_bar = tqdm(
            total=total,
            desc=description,
            unit=self.unit,
            position=self.position,
            leave=self.leave,
            unit_scale=True,
            bar_format=(
                "{l_bar}{bar}| {n_fmt}/{total_fmt} "
                "[{elapsed}<{remaining}, {rate_fmt}]{postfix}"
            ),
        )

    def update(self, n: int = 1) -> None:
        if self._progress_bar:
            self._progress_bar.update(n)

    def set_postfix(self, postfix: Dict[str, Any]) -> None:
        if self._progress_bar:
            self._progress_bar.set_postfix(postfix, refresh=False)

    def close(self) -> None:
        if self._progress_bar:
            self._progress_bar.close()
            self._progress_bar = None


class NoOpProgressTracker(ProgressTracker):
    """Tracker used when progress display is disabled or in worker processes."""

    def start(self, total: int, description: str) -> None:
        """No-op start."""

    def update(self, n: int = 1) -> None:
        """No-op update."""

    def set_postfix(self, postfix: Dict[str, Any]) -> None:
        """No-op set postfix."""

    def close(self) -> None:
        """No-op close."""


class ProgressTrackerFactory:
    """Factory for creating progress trackers."""

    @staticmethod
    def create_tqdm_tracker(
        unit: str = "evals", position: int = 0, leave: bool = True
    ) -> TqdmProgressTracker:
        return TqdmProgressTracker(unit, position=position, leave=leave)

    @staticmethod
    def create_noop_tracker() -> NoOpProgressTracker:
        return NoOpProgressTracker()

    @staticmethod
    def create(
        show_progress: bool, unit: str = "evals", position: int = 0, leave: bool = True
    ) -> ProgressTracker:
        """Tracker matching the ``SHOW_PROGRESS`` setting."""
        if show_progress:
            return TqdmProgressTracker(unit, position=position, leave=leave)
        return NoOpProgressTracker()
