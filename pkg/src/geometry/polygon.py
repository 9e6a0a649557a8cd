"""
Grid polygons: validated, simply connected unions of triangular cells.
"""
import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Literal, NamedTuple

import networkx as nx

from src.geometry.grid import (
    LINEAR,
    POINT_GROUP,
    Cell,
    DPoint,
    Pane,
    Symmetry,
    apply_symmetry,
    cell_key,
    cell_panes,
    cell_vertices,
    cells_around,
    compose,
    cross,
    pane_cells,
    pane_endpoints,
    pane_key,
    transform_cell,
    vertex,
)
from src.utils.logger import get_logger

logger = get_logger("geometry.polygon")

Mode = Literal["fixed", "free"]


class PolygonValidationError(Exception):
    """Raised when a set of cells is not a grid polygon."""
    pass


class EmptyInputError(PolygonValidationError):
    pass


class DisconnectedError(PolygonValidationError):
    pass


class HasHoleError(PolygonValidationError):
    pass


class PinchPointError(PolygonValidationError):
    pass


class OverlapError(PolygonValidationError):
    pass


class CutPane(NamedTuple):
    pane: Pane


@dataclass(frozen=True)
class GridPolygon:
    cells: frozenset
    boundary: tuple
    # pane -> 0-based position in the clockwise boundary walk
    boundary_index: dict = field(compare=False, hash=False, repr=False)
    # boundary pane -> its cell inside the polygon
    inner_cell: dict = field(compare=False, hash=False, repr=False)
    # boundary walk vertices: boundary[k] runs from walk[k] to walk[k + 1]
    walk: tuple = field(compare=False, hash=False, repr=False)

    @property
    def area(self) -> int:
        return len(self.cells)

    @property
    def perim(self) -> int:
        return len(self.boundary)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells, key=cell_key)

    def __repr__(self) -> str:
        return f"GridPolygon(area={self.area}, perim={self.perim}, cells={self.sorted_cells()})"


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def _dual_graph(cells: frozenset) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(cells)
    for c in cells:
        for p in cell_panes(c):
            up, down = pane_cells(p)
            if up in cells and down in cells:
                graph.add_edge(up, down, pane=p)
    return graph


def _check_fans(cells: frozenset, vertices: set) -> None:
    for v in sorted(vertices):
        members = [c in cells for c in cells_around(v)]
        runs = sum(1 for k in range(6) if members[k] and not members[k - 1])
        if runs > 1:
            raise PinchPointError(
                f"Cells touch at vertex p({v.a // 2},{v.b // 2}) without sharing a pane there"
            )


def _walk_boundary(cells: frozenset, boundary_panes: list) -> tuple[tuple, tuple, dict]:
    # Orient every boundary pane so the polygon lies on its right (clockwise walk).
    step = {}
    inner = {}
    for p in boundary_panes:
        up, down = pane_cells(p)
        c = up if up in cells else down
        inner[p] = c
        s, t = pane_endpoints(p)
        w = next(x for x in cell_vertices(c) if x != s and x != t)
        if cross(t - s, w - s) > 0:
            s, t = t, s
        step[s] = (p, t)

    start = min(boundary_panes, key=pane_key)
    s, t = pane_endpoints(start)
    if step[s][0] != start:
        s, t = t, s
    walk = [s]
    panes = []
    v = s
    while True:
        p, v = step[v]
        panes.append(p)
        walk.append(v)
        if v == s:
            break
    if len(panes) != len(boundary_panes):
        raise HasHoleError(
            f"Boundary is not a single closed walk ({len(panes)} of {len(boundary_panes)} panes reached)"
        )
    return tuple(panes), tuple(walk), inner


def signed_area2(walk: tuple) -> int:
    """Twice the lattice-signed area of a closed vertex walk; negative means clockwise."""
    origin = walk[0]
    total = 0
    for k in range(1, len(walk) - 1):
        total += cross(walk[k] - origin, walk[k + 1] - origin)
    return total


def from_cells(cells: Iterable[Cell]) -> GridPolygon:
    """
    Validate a set of cells and build its grid polygon.

    Args:
        cells: Cells of the polygon

    Returns:
        GridPolygon with a clockwise boundary starting at the minimum pane

    Raises:
        EmptyInputError: No cells given
        DisconnectedError: Cells are not connected through shared panes
        PinchPointError: Cells meet at a vertex in two separate fans
        HasHoleError: The cell complex is not simply connected
    """
    cells = frozenset(cells)
    if not cells:
        raise EmptyInputError("A grid polygon needs at least one cell")

    graph = _dual_graph(cells)
    if not nx.is_connected(graph):
        components = sorted(
            (sorted(comp, key=cell_key) for comp in nx.connected_components(graph)),
            key=lambda comp: cell_key(comp[0]),
        )
        raise DisconnectedError(
            f"Cells form {len(components)} components; second component starts at {components[1][0]!r}"
        )

    vertices = {v for c in cells for v in cell_vertices(c)}
    _check_fans(cells, vertices)

    panes = {p for c in cells for p in cell_panes(c)}
    euler = len(vertices) - len(panes) + len(cells)
    if euler != 1:
        raise HasHoleError(f"Euler characteristic is {euler}, expected 1 (the region has a hole)")

    boundary_panes = [p for p in panes if sum(c in cells for c in pane_cells(p)) == 1]
    boundary, walk, inner = _walk_boundary(cells, boundary_panes)
    return GridPolygon(
        cells=cells,
        boundary=boundary,
        boundary_index={p: k for k, p in enumerate(boundary)},
        inner_cell=inner,
        walk=walk,
    )


def boundary_vertices(P: GridPolygon) -> frozenset:
    return frozenset(P.walk)


def vertex_angle(P: GridPolygon, v: DPoint) -> int:
    """Interior angle of P at a lattice vertex, in degrees."""
    return 60 * sum(1 for c in cells_around(v) if c in P.cells)


def interior_panes(P: GridPolygon) -> frozenset:
    return frozenset(
        p
        for c in P.cells
        for p in cell_panes(c)
        if all(x in P.cells for x in pane_cells(p))
    )


# ---------------------------------------------------------------------------
# Cutting and primitive pieces
# ---------------------------------------------------------------------------

def cut_panes(P: GridPolygon) -> frozenset:
    """Interior panes with both endpoints on the boundary; empty iff P is primitive."""
    on_boundary = boundary_vertices(P)
    return frozenset(
        CutPane(p)
        for p in interior_panes(P)
        if all(v in on_boundary for v in pane_endpoints(p))
    )


def is_primitive(P: GridPolygon) -> bool:
    return not cut_panes(P)


def split(P: GridPolygon, cut: CutPane) -> tuple[GridPolygon, GridPolygon]:
    """Cut P along a cut pane into the two pieces that meet exactly in that pane."""
    graph = _dual_graph(P.cells)
    graph.remove_edge(*pane_cells(cut.pane))
    components = list(nx.connected_components(graph))
    if len(components) != 2:
        raise PolygonValidationError(f"{cut.pane!r} does not separate the polygon")
    first, second = sorted(components, key=lambda comp: min(cell_key(c) for c in comp))
    return from_cells(first), from_cells(second)


def primitive_pieces(P: GridPolygon) -> list[GridPolygon]:
    """
    Fully decompose P along cut panes.

    Returns:
        The primitive pieces in free canonical form, sorted by cell list
    """
    pieces = []
    stack = [P]
    while stack:
        current = stack.pop()
        cuts = cut_panes(current)
        if not cuts:
            pieces.append(canonical_form(current, "free"))
            continue
        first = min(cuts, key=lambda c: pane_key(c.pane))
        stack.extend(split(current, first))
    return sorted(pieces, key=lambda piece: canonical_cells(piece.cells, "fixed"))


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------

def _translate_to_origin(cells: Iterable[Cell]) -> tuple:
    ordered = sorted(cells, key=cell_key)
    i0, j0 = ordered[0].i, ordered[0].j
    return tuple(Cell(c.i - i0, c.j - j0, c.orient) for c in ordered)


def canonical_cells(cells: Iterable[Cell], mode: Mode) -> tuple:
    """Sorted cell tuple of the fixed (translation) or free (all 12 symmetries) form."""
    cells = tuple(cells)
    if mode == "fixed":
        return _translate_to_origin(cells)
    return min(
        _translate_to_origin(transform_cell(m, c) for c in cells)
        for m in LINEAR.values()
    )


def canonical_form(P: GridPolygon, mode: Mode) -> GridPolygon:
    return from_cells(canonical_cells(P.cells, mode))


def canonical_hash(P: GridPolygon, mode: Mode = "free") -> str:
    """First 12 hex digits of the sha1 of the canonical cell list in the given mode."""
    text = ";".join(f"{c.i},{c.j},{c.orient.name}" for c in canonical_cells(P.cells, mode))
    return hashlib.sha1(text.encode("utf-8")).hexdigest()[:12]


def orbit_size(cells: Iterable[Cell]) -> int:
    """Number of distinct fixed forms among the 12 symmetric images."""
    cells = tuple(cells)
    return len({_translate_to_origin(transform_cell(m, c) for c in cells) for m in LINEAR.values()})


def transformed(P: GridPolygon, g: Symmetry) -> GridPolygon:
    return from_cells(apply_symmetry(g, c) for c in P.cells)


# ---------------------------------------------------------------------------
# Gluing
# ---------------------------------------------------------------------------

def _gluing_maps(p1: Pane, outside1: Cell, p2: Pane, inside2: Cell) -> list[Symmetry]:
    targets = pane_endpoints(p1)
    maps = []
    for linear in POINT_GROUP:
        for source in pane_endpoints(p2):
            image = apply_symmetry(linear, source)
            shift = targets[0] - image
            g = compose(Symmetry(ti=shift.a // 2, tj=shift.b // 2), linear)
            if apply_symmetry(g, p2) == p1 and apply_symmetry(g, inside2) == outside1:
                maps.append(g)
    return sorted(set(maps), key=lambda g: (g.reflect, g.rotation))


def glue(P1: GridPolygon, p1: Pane, P2: GridPolygon, p2: Pane) -> GridPolygon:
    """
    Glue P2 onto P1 so that p2 lands on p1 with the two interiors on opposite sides.

    Args:
        P1: Polygon that stays in place
        p1: Boundary pane of P1
        P2: Polygon to be moved
        p2: Boundary pane of P2

    Returns:
        The validated union

    Raises:
        PolygonValidationError: A pane is not on the boundary, or the union is not a grid polygon
        OverlapError: The moved copy overlaps P1 or touches it along another pane
    """
    if p1 not in P1.boundary_index:
        raise PolygonValidationError(f"{p1!r} is not a boundary pane of the first polygon")
    if p2 not in P2.boundary_index:
        raise PolygonValidationError(f"{p2!r} is not a boundary pane of the second polygon")

    up, down = pane_cells(p1)
    outside1 = down if P1.inner_cell[p1] == up else up
    maps = _gluing_maps(p1, outside1, p2, P2.inner_cell[p2])
    g = maps[0]
    logger.debug(f"Gluing {p2!r} onto {p1!r} with {g}")

    moved = frozenset(apply_symmetry(g, c) for c in P2.cells)
    if moved & P1.cells:
        raise OverlapError(f"Glued copy overlaps {len(moved & P1.cells)} cells of the first polygon")
    shared = {p for c in moved for p in cell_panes(c)} & {p for c in P1.cells for p in cell_panes(c)}
    if shared != {p1}:
        extra = sorted(shared - {p1}, key=pane_key)
        raise OverlapError(f"Glued copy also touches the first polygon along {extra}")
    return from_cells(P1.cells | moved)



_UNIT_HEXAGON = canonical_cells(cells_around(vertex(1, 1)), "free")


def is_tree_of_unit_hexagons(P: GridPolygon) -> bool:
    """True iff every primitive piece of P is a unit hexagon."""
    if P.area % 6:
        return False
    return all(piece.sorted_cells() == list(_UNIT_HEXAGON) for piece in primitive_pieces(P))
