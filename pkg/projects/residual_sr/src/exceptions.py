"""Exception hierarchy for the residual SR engine.

Guard violations during expression evaluation are not errors; they are
encoded in evaluation outcomes. Everything here signals misuse or bad input.
"""

from typing import List, Sequence, Tuple


class ResidualSRError(Exception):
    """Base class for all engine errors."""


class DatasetError(ResidualSRError, ValueError):
    """Dataset construction, generation, ingestion or transform failure."""


class ClusteringError(ResidualSRError, ValueError):
    """Clustering could not be computed or loaded."""


class WeightLengthError(ResidualSRError, ValueError):
    """Weight vector length does not match the tree's node count."""


class DimensionMismatchError(ResidualSRError, ValueError):
    """Candidate vectors do not match the evolution strategy dimension."""


class ArchiveEmptyError(ResidualSRError, LookupError):
    """Selection was requested from an archive without elites."""


class ExpressionParseError(ResidualSRError, ValueError):
    """Canonical expression text could not be parsed."""


class TraceError(ResidualSRError, ValueError):
    """Run traces are missing or cannot be aggregated."""


class ConfigValidationError(ResidualSRError, ValueError):
    """Run configuration failed validation.

    Attributes:
        problems: ``(path, message)`` pairs, one per invalid field
    """

    def __init__(self, problems: Sequence[Tuple[str, str]]):
        """Initialize with the list of field problems.

        Args:
            problems: ``(path, message)`` pairs
        """
        self.problems: List[Tuple[str, str]] = list(problems)
        summary = "; ".join(f"{path}: {message}" for path, message in self.problems)
        super().__init__(f"Invalid configuration: {summary}")
