"""
Logging configuration for the application.
"""
import logging
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

from src.config import config

# Log format
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# Detailed format for file logging
DETAILED_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(funcName)s() - %(message)s"

ROOT_NAME = "trigrid"


def setup_logger(
    name: str = ROOT_NAME,
    level: Optional[str] = None,
    log_dir: Optional[str] = None,
) -> logging.Logger:
    """
    Set up a logger with a stderr handler and an optional rotating file handler.

    Reports go to stdout, so console logging stays on stderr.

    Args:
        name: Logger name
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL); LOG_LEVEL when None
        log_dir: Directory for the rotating log file; no file logging when None

    Returns:
        Configured logger instance

    Raises:
        ValueError: If LOG_LEVEL is not a logging level name
    """
    logger = logging.getLogger(name)

    # Don't add handlers if they already exist
    if logger.handlers:
        return logger

    log_level = logging.getLevelNamesMapping()[(level or config.get_log_level()).upper()]
    logger.setLevel(log_level)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
    logger.addHandler(console_handler)

    if log_dir:
        path = Path(log_dir)
        path.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            path / f"trigrid_{datetime.now().strftime('%Y%m%d')}.log",
            maxBytes=10 * 1024 * 1024,  # 10MB
            backupCount=5,
            encoding="utf-8",
        )
        file_handler.setLevel(log_level)
        file_handler.setFormatter(logging.Formatter(DETAILED_FORMAT, DATE_FORMAT))
        logger.addHandler(file_handler)

    # Prevent propagation to root logger
    logger.propagate = False

    return logger


def set_level(level: str) -> None:
    """Change the level of the root logger and its handlers (used by --verbose)."""
    logger = logging.getLogger(ROOT_NAME)
    log_level = getattr(logging, level.upper(), logging.INFO)
    logger.setLevel(log_level)
    for handler in logger.handlers:
        handler.setLevel(log_level)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger instance. If name is provided, returns a child logger.

    Args:
        name: Optional logger name (e.g., 'services.billiards', 'commands.verify')

    Returns:
        Logger instance
    """
    if name:
        return logging.getLogger(f"{ROOT_NAME}.{name}")
    return logging.getLogger(ROOT_NAME)


# Initialize root logger
root_logger = setup_logger(ROOT_NAME, config.get_log_level(), config.get_log_dir())
