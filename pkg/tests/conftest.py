"""
Pytest configuration and fixtures.
"""
from pathlib import Path

import pytest

from src.geometry.grid import cells_around, vertex
from src.geometry.polygon import from_cells
from src.geometry.shapes import HEX, HEX_WITH_TAIL, RHOMB, TRI

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "data" / "fixtures"


@pytest.fixture
def fixtures_dir():
    """Directory holding the polygon and plabic json fixtures."""
    return FIXTURES_DIR


@pytest.fixture
def tri():
    """The single up triangle U(0,0)."""
    return TRI


@pytest.fixture
def rhomb():
    """Two triangles sharing an L pane; one 4-cycle."""
    return RHOMB


@pytest.fixture
def hexagon():
    """Unit hexagon around p(1,1); two triangular cycles."""
    return HEX


@pytest.fixture
def hex_with_tail():
    """Unit hexagon with three extra cells; cycles of sizes 6 and 3."""
    return HEX_WITH_TAIL


@pytest.fixture
def double_hexagon():
    """Two overlapping unit hexagons; primitive, area 10, a single 8-cycle."""
    return from_cells(set(cells_around(vertex(1, 1))) | set(cells_around(vertex(2, 1))))


@pytest.fixture
def pentagon_fan_json(fixtures_dir):
    """A trivalent plabic graph with five boundary points, as json text."""
    return (fixtures_dir / "pentagon_fan_plabic.json").read_text(encoding="utf-8")
