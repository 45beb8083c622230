"""Global fitness-evaluation budget."""

import logging
from typing import Callable, Optional

logger = logging.getLogger(__name__)


class EvaluationBudget:
    """Counts full-dataset evaluations against a fixed limit.

    Every evaluation of a tree against the whole dataset consumes exactly
    one unit. Callers must check ``can_afford`` before evaluating.
    """

    def __init__(self, limit: int, on_consume: Optional[Callable[[int], None]] = None):
        """Initialize the budget.

        Args:
            limit: Maximum number of evaluations
            on_consume: Optional callback receiving each consumed amount
        """
        if limit <= 0:
            raise ValueError("Evaluation budget must be positive")
        self.limit = limit
        self.used = 0
        self._on_consume = on_consume

    @property
    def remaining(self) -> int:
        return self.limit - self.used

    @property
    def exhausted(self) -> bool:
        return self.used >= self.limit

    def can_afford(self, count: int = 1) -> bool:
        """Whether ``count`` more evaluations fit in the budget."""
        return self.remaining >= count

    def consume(self, count: int = 1) -> None:
        """Record ``count`` evaluations.

        Raises:
            RuntimeError: If the budget would be exceeded
        """
        if count > self.remaining:
            raise RuntimeError(
                f"Evaluation budget exceeded: {self.used} + {count} > {self.limit}"
            )
        self.used += count
        if self._on_consume is not None:
            self._on_consume(count)
