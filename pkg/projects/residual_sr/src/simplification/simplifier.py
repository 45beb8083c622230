"""Simplification pipeline with probe and guard-range safety checks."""

import logging
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ..datasets.models import Dataset
from ..expression import (
    ExpressionTree,
    TreeLimits,
    evaluate_batch,
    guards_preserved,
)
from .folding import constant_fold
from .rewrites import RULE_FAMILIES

logger = logging.getLogger(__name__)

Rule = Callable[[ExpressionTree, int], Optional[ExpressionTree]]
Domain = Tuple[np.ndarray, np.ndarray]


def draw_probes(dataset: Dataset, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform probe inputs inside the dataset's per-column input range."""
    low, high = dataset.domain_bounds()
    return rng.uniform(low, high, size=(count, dataset.d))


class ExpressionSimplifier:
    """Constant folding plus verified algebraic rewrites.

    A rewrite is accepted only if it does not add nodes, keeps the tree
    within limits, and reproduces the flags and values of the input tree on
    every probe to within ``tolerance * (1 + |value|)``. A rewrite that adds
    or drops a guard must also show, by range bounds over ``domain``, that
    the guard never fires anywhere in that box.
    """

    def __init__(
        self,
        probes: np.ndarray,
        limits: Optional[TreeLimits] = None,
        tolerance: float = 1e-9,
        max_passes: int = 20,
        rules: Sequence[Rule] = RULE_FAMILIES,
        domain: Optional[Domain] = None,
    ):
        """Initialize the simplifier.

        Args:
            probes: ``(m, d)`` probe inputs, fixed for the run
            limits: Tree limits candidates must respect
            tolerance: Relative agreement tolerance on probes
            max_passes: Cap on fold-and-rewrite passes
            rules: Rewrite families, applied in order
            domain: Per-column ``(low, high)`` input box; defaults to the
                probes' own range
        """
        self.probes = np.atleast_2d(np.asarray(probes, dtype=float))
        self.limits = limits or TreeLimits()
        self.tolerance = tolerance
        self.max_passes = max_passes
        self.rules = tuple(rules)
        if domain is None:
            domain = (self.probes.min(axis=0), self.probes.max(axis=0))
        self.low = np.asarray(domain[0], dtype=float)
        self.high = np.asarray(domain[1], dtype=float)

    def agrees(self, before: ExpressionTree, after: ExpressionTree) -> bool:
        """Whether ``after`` matches ``before`` on every probe."""
        old = evaluate_batch(before, self.probes)
        new = evaluate_batch(after, self.probes)
        if not np.array_equal(old.flagged, new.flagged):
            return False
        usable = ~old.flagged
        gap = np.abs(new.values[usable] - old.values[usable])
        return bool(np.all(gap <= self.tolerance * (1.0 + np.abs(old.values[usable]))))

    def accepts(self, before: ExpressionTree, after: ExpressionTree) -> bool:
        """Acceptance rule for a single rewrite."""
        return (
            after != before
            and after.node_count <= before.node_count
            and self.limits.admits(after)
            and self.agrees(before, after)
            and guards_preserved(before, after, self.low, self.high)
        )

    def _apply_rule(self, tree: ExpressionTree, rule: Rule) -> ExpressionTree:
        position = 0
        attempts = 4 * tree.node_count
        while position < tree.node_count and attempts > 0:
            try:
                replacement = rule(tree, position)
            except ValueError:
                replacement = None
            if replacement is not None:
                attempts -= 1
                candidate = tree.replace_subtree(position, replacement)
                if self.accepts(tree, candidate):
                    tree = candidate
                    continue
                logger.debug("Rejected %s at %d", rule.__name__, position)
            position += 1
        return tree

    def rewrite(self, tree: ExpressionTree) -> ExpressionTree:
        """One pass of every rewrite family, in order."""
        for rule in self.rules:
            tree = self._apply_rule(tree, rule)
        return tree

    def simplify(self, tree: ExpressionTree) -> ExpressionTree:
        """Fold and rewrite until nothing changes or the pass cap is hit."""
        current = constant_fold(tree)
        for _ in range(self.max_passes):
            rewritten = self.rewrite(current)
            folded = constant_fold(rewritten)
            if folded == current:
                break
            current = folded
        return current

    @classmethod
    def from_dataset(
        cls,
        dataset: Dataset,
        rng: np.random.Generator,
        count: int = 32,
        limits: Optional[TreeLimits] = None,
    ) -> "ExpressionSimplifier":
        """Build a simplifier with probes drawn from ``dataset``'s domain."""
        return cls(
            draw_probes(dataset, count, rng),
            limits=limits,
            domain=dataset.domain_bounds(),
        )


def algebraic_simplify(
    tree: ExpressionTree, probes: np.ndarray, limits: Optional[TreeLimits] = None
) -> ExpressionTree:
    """Apply the rewrite families once each, verified on ``probes``."""
    return ExpressionSimplifier(probes, limits=limits).rewrite(tree)


def simplify(
    tree: ExpressionTree, probes: np.ndarray, limits: Optional[TreeLimits] = None
) -> ExpressionTree:
    """Full fold-and-rewrite pipeline."""
    return ExpressionSimplifier(probes, limits=limits).simplify(tree)
