"""Search engine interface."""

from abc import ABC, abstractmethod

from .context import RunContext
from .trace import RunTrace


class SearchEngine(ABC):
    """Abstract interface for the top-level search loops."""

    @abstractmethod
    def run(self, context: RunContext) -> RunTrace:
        """Run a full search within the context's evaluation budget.

        Args:
            context: Prepared dataset, clustering, evaluator and RNG streams

        Returns:
            RunTrace with generation records and the final snapshot
        """
        raise NotImplementedError

    @abstractmethod
    def get_engine_name(self) -> str:
        """Get the method name used in configs and logs."""
        raise NotImplementedError
