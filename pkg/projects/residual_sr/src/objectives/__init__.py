"""Losses, fitness and budget-counting evaluation."""

from .budget import EvaluationBudget
from .evaluator import Evaluation, ExpressionEvaluator
from .losses import (
    LossKind,
    fitness,
    fitness_from_loss,
    loss,
    loss_from_residuals,
    residuals,
)

__all__ = [
    "Evaluation",
    "EvaluationBudget",
    "ExpressionEvaluator",
    "LossKind",
    "fitness",
    "fitness_from_loss",
    "loss",
    "loss_from_residuals",
    "residuals",
]
