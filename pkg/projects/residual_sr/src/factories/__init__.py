"""Factories for engines."""

from .engine_factory import SearchEngineFactory

__all__ = ["SearchEngineFactory"]
