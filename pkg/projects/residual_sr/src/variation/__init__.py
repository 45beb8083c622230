"""Population initialization and GP variation operators."""

from .initialization import build_tree, build_valid_tree, ramped_half_and_half
from .operators import VariationConfig, subtree_crossover, subtree_mutation

__all__ = [
    "VariationConfig",
    "build_tree",
    "build_valid_tree",
    "ramped_half_and_half",
    "subtree_crossover",
    "subtree_mutation",
]
