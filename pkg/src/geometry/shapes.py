"""
Named grid polygons used as fixtures and building blocks.
"""
from src.geometry.grid import D, U, cells_around, vertex
from src.geometry.polygon import (
    GridPolygon,
    PolygonValidationError,
    canonical_cells,
    from_cells,
    glue,
    is_primitive,
)
from src.utils.logger import get_logger

logger = get_logger("geometry.shapes")

TRI = from_cells([U(0, 0)])
TRI_DOWN = from_cells([D(0, 0)])
RHOMB = from_cells([U(0, 0), D(0, 0)])


def unit_hexagon(i: int, j: int) -> GridPolygon:
    """The six cells around grid vertex p(i, j)."""
    return from_cells(cells_around(vertex(i, j)))


HEX = unit_hexagon(1, 1)

# Unit hexagon around p(1,1) with a three-cell tail on the right and one cell on the left;
# area 9, perimeter 9, cycle type {6, 3}.
HEX_WITH_TAIL = from_cells(list(HEX.cells) + [D(1, 1), U(1, 2), D(-1, 1)])


def hexagon_tree(k: int) -> GridPolygon:
    """
    Build a tree of k unit hexagons by repeated gluing.

    Each new hexagon is glued by its first boundary pane onto the first boundary
    pane of the current tree where the union stays a grid polygon.

    Args:
        k: Number of hexagons (k >= 1)

    Returns:
        Grid polygon with area 6k

    Raises:
        ValueError: If k < 1
    """
    if k < 1:
        raise ValueError(f"A hexagon tree needs at least one hexagon, got {k}")
    tree = HEX
    for _ in range(k - 1):
        for pane in tree.boundary:
            try:
                tree = glue(tree, pane, HEX, HEX.boundary[0])
                break
            except PolygonValidationError:
                continue
        else:
            raise PolygonValidationError("No boundary pane accepts another hexagon")  # unreachable
    logger.debug(f"Built hexagon tree k={k}: area={tree.area}, perim={tree.perim}")
    return tree


_FORCED_EXCEPTIONS = {canonical_cells(TRI.cells, "free"), canonical_cells(HEX.cells, "free")}


def is_exceptional_primitive(P: GridPolygon) -> bool:
    """
    True for the primitive shapes exempt from the primitive cycle bounds.

    The triangle and the unit hexagon are exempt outright; the third exempt shape is
    the primitive polygon of area 16 with 3 cycles.
    """
    if not is_primitive(P):
        return False
    if canonical_cells(P.cells, "free") in _FORCED_EXCEPTIONS:
        return True
    if P.area != 16:
        return False
    from src.services.billiards import billiards_permutation

    return billiards_permutation(P).cyc == 3
