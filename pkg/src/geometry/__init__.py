"""
Geometry package - triangular grid lattice and grid polygons.
"""
from src.geometry.grid import Cell, Direction, DPoint, Orient, Pane, PaneType, Symmetry
from src.geometry.polygon import (
    CutPane,
    GridPolygon,
    PolygonValidationError,
    canonical_form,
    canonical_hash,
    cut_panes,
    from_cells,
    glue,
    is_tree_of_unit_hexagons,
    primitive_pieces,
)

__all__ = [
    "Cell",
    "Direction",
    "DPoint",
    "Orient",
    "Pane",
    "PaneType",
    "Symmetry",
    "CutPane",
    "GridPolygon",
    "PolygonValidationError",
    "canonical_form",
    "canonical_hash",
    "cut_panes",
    "from_cells",
    "glue",
    "is_tree_of_unit_hexagons",
    "primitive_pieces",
]
