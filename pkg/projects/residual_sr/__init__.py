"""Residual-diversified symbolic regression package initialization."""
