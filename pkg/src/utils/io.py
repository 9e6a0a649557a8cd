"""
Polygon and plabic file reading and writing.
"""
import json
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from src.geometry.grid import Cell, Orient
from src.geometry.polygon import GridPolygon, from_cells
from src.models import PolygonFileModel
from src.utils.logger import get_logger

logger = get_logger("utils.io")

PathLike = Union[str, Path]


class InputFormatError(Exception):
    """Raised when an input file cannot be parsed; carries the file and position."""

    def __init__(self, path: PathLike, message: str, line: int = None, column: int = None):
        self.path = str(path)
        self.line = line
        self.column = column
        where = self.path
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")


def parse_polygon(text: str, path: PathLike = "<string>") -> GridPolygon:
    """
    Parse a polygon document {"cells": [[i, j, "U"|"D"], ...]}.

    Raises:
        InputFormatError: Malformed json, unknown keys, bad cells or duplicates
        PolygonValidationError: The cells do not form a grid polygon
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(path, e.msg, e.lineno, e.colno) from e
    try:
        model = PolygonFileModel.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise InputFormatError(path, f"{location}: {first['msg']}") from e
    cells = [Cell(i, j, Orient[o]) for i, j, o in model.cells]
    return from_cells(cells)


def load_polygon(path: PathLike) -> GridPolygon:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(path, f"cannot read file: {e.strerror}") from e
    polygon = parse_polygon(text, path)
    logger.debug(f"Loaded {path}: area={polygon.area}, perim={polygon.perim}")
    return polygon


def dump_polygon(P: GridPolygon) -> str:
    model = PolygonFileModel(cells=[(c.i, c.j, c.orient.name) for c in P.sorted_cells()])
    return json.dumps(model.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"


def save_polygon(P: GridPolygon, path: PathLike) -> None:
    Path(path).write_text(dump_polygon(P), encoding="utf-8")
    logger.info(f"Wrote polygon with {P.area} cells to {path}")

