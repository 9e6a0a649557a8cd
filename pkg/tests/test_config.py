"""
Tests for environment configuration and logging setup.
"""
import logging

import pytest

from src.config import Config
from src.utils.logger import ROOT_NAME, get_logger, set_level, setup_logger


class TestConfig:
    """Tests for Config getters."""

    def test_defaults(self, monkeypatch):
        """Unset variables fall back to the defaults."""
        for name in ("LOG_LEVEL", "DEFAULT_MAX_AREA", "DEFAULT_THREADS", "RENDER_SCALE", "RENDER_PALETTE", "RENDER_MARGIN"):
            monkeypatch.delenv(name, raising=False)
        config = Config()
        assert config.get_log_level() == "INFO"
        assert config.get_max_area() == 12
        assert config.get_threads() == 1
        assert config.get_render_scale() == 40.0
        assert len(config.get_render_palette()) == 6
        assert config.get_render_margin() == 20.0

    def test_overrides(self, monkeypatch):
        """Environment variables override the defaults."""
        monkeypatch.setenv("DEFAULT_MAX_AREA", "8")
        monkeypatch.setenv("RENDER_PALETTE", "red, blue")
        monkeypatch.setenv("LOG_LEVEL", "debug")
        config = Config()
        assert config.get_max_area() == 8
        assert config.get_render_palette() == ["red", "blue"]
        assert config.get_log_level() == "DEBUG"

    @pytest.mark.parametrize(
        "name,value,getter",
        [
            ("DEFAULT_MAX_AREA", "ten", "get_max_area"),
            ("DEFAULT_THREADS", "0", "get_threads"),
            ("RENDER_SCALE", "-1", "get_render_scale"),
            ("RENDER_MARGIN", "wide", "get_render_margin"),
            ("RENDER_PALETTE", " , ", "get_render_palette"),
            ("LOG_LEVEL", "LOUD", "get_log_level"),
        ],
    )
    def test_bad_values(self, monkeypatch, name, value, getter):
        """Bad values raise ValueError naming the variable."""
        monkeypatch.setenv(name, value)
        with pytest.raises(ValueError) as exc_info:
            getattr(Config(), getter)()
        assert name in str(exc_info.value)


class TestLogger:
    """Tests for logger helpers."""

    def test_child_names(self):
        """Module loggers hang off the project root logger."""
        assert get_logger("services.billiards").name == f"{ROOT_NAME}.services.billiards"
        assert get_logger().name == ROOT_NAME

    def test_set_level(self):
        """set_level changes the root logger and its handlers."""
        root = logging.getLogger(ROOT_NAME)
        previous = logging.getLevelName(root.level)
        try:
            set_level("DEBUG")
            assert root.level == logging.DEBUG
            assert all(h.level == logging.DEBUG for h in root.handlers)
        finally:
            set_level(previous)

    def test_level_from_config(self, monkeypatch):
        """Without an explicit level a new logger takes LOG_LEVEL from config."""
        monkeypatch.setenv("LOG_LEVEL", "warning")
        monkeypatch.setattr("src.utils.logger.config", Config())
        logger = setup_logger("trigrid_config_level")
        try:
            assert logger.level == logging.WARNING
        finally:
            logger.handlers.clear()

    def test_bad_level_from_config(self, monkeypatch):
        """A bad LOG_LEVEL fails loudly instead of falling back to INFO."""
        monkeypatch.setenv("LOG_LEVEL", "LOUD")
        monkeypatch.setattr("src.utils.logger.config", Config())
        with pytest.raises(ValueError, match="LOG_LEVEL"):
            setup_logger("trigrid_config_bad_level")
