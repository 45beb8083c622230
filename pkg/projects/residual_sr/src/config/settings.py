"""Ambient application settings loaded from the environment."""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

_TRUE_VALUES = {"1", "true", "yes", "on"}
_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class AppSettings:
    """Process-level settings that never affect search results."""

    log_level: str
    log_file: Optional[str]
    show_progress: bool

    def validate(self) -> None:
        """Validate settings values.

        Raises:
            ValueError: If the log level is unknown
        """
        if self.log_level.upper() not in _LOG_LEVELS:
            raise ValueError(
                f"Unknown log level {self.log_level!r}; choose from {_LOG_LEVELS}"
            )

    @property
    def numeric_log_level(self) -> int:
        return getattr(logging, self.log_level.upper())


class SettingsManager:
    """Loads ``AppSettings`` from environment variables and ``.env``."""

    DEFAULT_LOG_LEVEL = "INFO"
    DEFAULT_SHOW_PROGRESS = True

    def __init__(self, load_env: bool = True):
        """Initialize the settings manager.

        Args:
            load_env: Whether to load environment variables from .env file
        """
        if load_env:
            load_dotenv()

    def load_settings(self, **overrides) -> AppSettings:
        """Load settings with optional overrides.

        Args:
            **overrides: Values taking precedence over the environment

        Returns:
            Validated AppSettings

        Raises:
            ValueError: If validation fails
        """
        show_progress_env = os.getenv("SHOW_PROGRESS")
        settings = AppSettings(
            log_level=overrides.get("log_level")
            or os.getenv("LOG_LEVEL", self.DEFAULT_LOG_LEVEL),
            log_file=overrides.get("log_file") or os.getenv("LOG_FILE") or None,
            show_progress=overrides.get(
                "show_progress",
                self.DEFAULT_SHOW_PROGRESS
                if show_progress_env is None
                else show_progress_env.strip().lower() in _TRUE_VALUES,
            ),
        )
        settings.validate()
        return settings
