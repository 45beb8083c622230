"""Unit tests for environment-backed settings."""

import logging
import os
import unittest
from unittest.mock import patch

import pytest

from projects.residual_sr.src.config import AppSettings, SettingsManager

LOAD_DOTENV_PATH = "projects.residual_sr.src.config.settings.load_dotenv"


class TestAppSettings(unittest.TestCase):
    """Test AppSettings validation."""

    def test_numeric_level(self):
        settings = AppSettings(log_level="debug", log_file=None, show_progress=False)
        settings.validate()
        assert settings.numeric_log_level == logging.DEBUG

    def test_unknown_level(self):
        settings = AppSettings(log_level="LOUD", log_file=None, show_progress=True)
        with pytest.raises(ValueError, match="Unknown log level"):
            settings.validate()


class TestSettingsManager(unittest.TestCase):
    """Test SettingsManager."""

    @patch(LOAD_DOTENV_PATH)
    def test_loads_dotenv_when_requested(self, mock_load_dotenv):
        SettingsManager(load_env=True)
        mock_load_dotenv.assert_called_once()

    @patch(LOAD_DOTENV_PATH)
    def test_skips_dotenv(self, mock_load_dotenv):
        SettingsManager(load_env=False)
        mock_load_dotenv.assert_not_called()

    @patch.dict(os.environ, {}, clear=True)
    def test_defaults(self):
        settings = SettingsManager(load_env=False).load_settings()
        assert settings.log_level == "INFO"
        assert settings.log_file is None
        assert settings.show_progress is True

    @patch.dict(
        os.environ,
        {"LOG_LEVEL": "WARNING", "LOG_FILE": "/tmp/run.log", "SHOW_PROGRESS": "off"},
        clear=True,
    )
    def test_environment_values(self):
        settings = SettingsManager(load_env=False).load_settings()
        assert settings.log_level == "WARNING"
        assert settings.log_file == "/tmp/run.log"
        assert settings.show_progress is False

    @patch.dict(os.environ, {"SHOW_PROGRESS": "yes", "LOG_LEVEL": "INFO"}, clear=True)
    def test_overrides_take_precedence(self):
        settings = SettingsManager(load_env=False).load_settings(
            log_level="DEBUG", show_progress=False
        )
        assert settings.log_level == "DEBUG"
        assert settings.show_progress is False

    @patch.dict(os.environ, {"LOG_LEVEL": "CHATTY"}, clear=True)
    def test_invalid_environment_level(self):
        with pytest.raises(ValueError):
            SettingsManager(load_env=False).load_settings()
