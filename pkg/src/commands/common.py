"""
Helpers shared by the subcommands.
"""
import argparse
import sys
from pathlib import Path
from typing import Optional

from src.geometry.grid import Pane
from src.geometry.polygon import GridPolygon
from src.utils.logger import get_logger

logger = get_logger("commands.common")


class UsageError(Exception):
    """Raised instead of exiting when the command line cannot be parsed."""
    pass


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose errors raise UsageError, so the caller picks the exit code."""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {value}")
    return value


def boundary_pane(P: GridPolygon, index: int, flag: str) -> Pane:
    """The boundary pane with 1-based canonical index, or ValueError naming the flag."""
    if not 1 <= index <= P.perim:
        raise ValueError(f"{flag} must be between 1 and {P.perim}, got {index}")
    return P.boundary[index - 1]


def emit(text: str, out: Optional[Path]) -> None:
    """Write text to the --out file when given, stdout otherwise."""
    if out is None:
        sys.stdout.write(text)
        return
    out.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {out}")
