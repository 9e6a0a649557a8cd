"""
Plabic graphs and trips.

The dual of a grid polygon has a black vertex for each up cell and a white vertex
for each down cell. Trips turn right at black vertices and left at white ones,
which in terms of the clockwise edge order at a vertex means: leave by the edge
just before the arrival edge at black, just after it at white.
"""
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Literal, NamedTuple

from pydantic import ValidationError

from src.geometry.grid import Orient, PaneType, cell_panes, pane_cells, pane_key
from src.geometry.polygon import GridPolygon, interior_panes
from src.models import PlabicGraphModel
from src.services.billiards import BilliardsPermutation, ConsistencyError
from src.utils.logger import get_logger

logger = get_logger("services.plabic")

ExportFormat = Literal["json", "dot"]


class NonTrivalentError(ValueError):
    """Raised when a plabic vertex does not have exactly three edges."""
    pass


class PlabicFormatError(ValueError):
    """Raised when a plabic graph document cannot be parsed."""
    pass


class Endpoint(NamedTuple):
    kind: Literal["vertex", "boundary"]
    index: int


class Trip(NamedTuple):
    start: int
    end: int
    path: tuple[int, ...]


@dataclass(frozen=True)
class PlabicGraph:
    colors: tuple[str, ...]
    edges: tuple[tuple[Endpoint, Endpoint], ...]
    rotation: tuple[tuple[int, ...], ...]
    boundary_count: int

    def __post_init__(self):
        if len(self.rotation) != len(self.colors):
            raise PlabicFormatError(
                f"{len(self.colors)} vertices but {len(self.rotation)} rotation lists"
            )
        for v, order in enumerate(self.rotation):
            if len(order) != 3:
                raise NonTrivalentError(f"Vertex {v} has {len(order)} edges, expected 3")
            for e in order:
                if Endpoint("vertex", v) not in self.edges[e]:
                    raise PlabicFormatError(f"Edge {e} in the rotation of vertex {v} does not touch it")
        attached = sorted(end.index for pair in self.edges for end in pair if end.kind == "boundary")
        if attached != list(range(self.boundary_count)):
            raise PlabicFormatError("Every boundary point needs exactly one edge")

    @property
    def n(self) -> int:
        return self.boundary_count

    @cached_property
    def boundary_edge(self) -> tuple[int, ...]:
        edge_of = {}
        for e, pair in enumerate(self.edges):
            for end in pair:
                if end.kind == "boundary":
                    edge_of[end.index] = e
        return tuple(edge_of[k] for k in range(self.boundary_count))

    def other_end(self, e: int, end: Endpoint) -> Endpoint:
        a, b = self.edges[e]
        return b if a == end else a


def dual(P: GridPolygon) -> PlabicGraph:
    """
    Dual plabic graph of a grid polygon.

    Boundary point k is attached to the interior cell of boundary pane k; vertex
    rotations follow the clockwise order of the cell's sides.
    """
    cells = P.sorted_cells()
    vertex_of = {c: k for k, c in enumerate(cells)}
    edges = []
    edge_of_pane = {}
    for k, pane in enumerate(P.boundary):
        edge_of_pane[pane] = len(edges)
        edges.append((Endpoint("boundary", k), Endpoint("vertex", vertex_of[P.inner_cell[pane]])))
    for pane in sorted(interior_panes(P), key=pane_key):
        up, down = pane_cells(pane)
        edge_of_pane[pane] = len(edges)
        edges.append((Endpoint("vertex", vertex_of[up]), Endpoint("vertex", vertex_of[down])))

    rotation = []
    for c in cells:
        by_type = {p.ptype: p for p in cell_panes(c)}
        order = _CLOCKWISE_SIDES[c.orient]
        rotation.append(tuple(edge_of_pane[by_type[t]] for t in order))

    logger.debug(f"Dual graph: {len(cells)} vertices, {len(edges)} edges, {P.perim} boundary points")
    return PlabicGraph(
        colors=tuple("black" if c.orient == Orient.U else "white" for c in cells),
        edges=tuple(edges),
        rotation=tuple(rotation),
        boundary_count=P.perim,
    )


_CLOCKWISE_SIDES = {
    Orient.U: (PaneType.R, PaneType.L, PaneType.H),
    Orient.D: (PaneType.H, PaneType.R, PaneType.L),
}


def trip(G: PlabicGraph, i: int, reverse: bool = False) -> Trip:
    """
    Follow the trip starting at boundary point i (0-based).

    Args:
        G: Plabic graph
        i: Starting boundary index
        reverse: Swap the turning rules of the two colors

    Raises:
        ConsistencyError: If the walk runs longer than twice the number of edges
    """
    e = G.boundary_edge[i]
    here = G.other_end(e, Endpoint("boundary", i))
    path = [e]
    limit = 2 * len(G.edges)
    while here.kind == "vertex":
        order = G.rotation[here.index]
        pos = order.index(e)
        turn_right = (G.colors[here.index] == "black") != reverse
        e = order[pos - 1] if turn_right else order[(pos + 1) % len(order)]
        path.append(e)
        if len(path) > limit:
            raise ConsistencyError(f"Trip from boundary point {i} does not terminate")
        here = G.other_end(e, here)
    return Trip(start=i, end=here.index, path=tuple(path))


def trip_permutation(G: PlabicGraph) -> BilliardsPermutation:
    return BilliardsPermutation(tuple(trip(G, i).end for i in range(G.n)))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def to_model(G: PlabicGraph) -> PlabicGraphModel:
    return PlabicGraphModel(
        colors=list(G.colors),
        edges=[tuple(tuple(end) for end in pair) for pair in G.edges],
        rotation=[list(order) for order in G.rotation],
        boundary_count=G.boundary_count,
    )


def _to_dot(G: PlabicGraph) -> str:
    lines = ["graph plabic {"]
    for v, color in enumerate(G.colors):
        lines.append(f'  v{v} [shape=circle, style=filled, fillcolor={color}, label=""];')
    for k in range(G.boundary_count):
        lines.append(f'  b{k + 1} [shape=plaintext, label="{k + 1}"];')
    for a, b in G.edges:
        names = [f"v{end.index}" if end.kind == "vertex" else f"b{end.index + 1}" for end in (a, b)]
        lines.append(f"  {names[0]} -- {names[1]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(G: PlabicGraph, fmt: ExportFormat = "json") -> str:
    """Deterministic text serialization of a plabic graph."""
    if fmt == "json":
        return json.dumps(to_model(G).model_dump(mode="json"), indent=2, sort_keys=True) + "\n"
    if fmt == "dot":
        return _to_dot(G)
    raise ValueError(f"Unknown export format: {fmt}")


def from_model(model: PlabicGraphModel) -> PlabicGraph:
    return PlabicGraph(
        colors=tuple(model.colors),
        edges=tuple((Endpoint(*a), Endpoint(*b)) for a, b in model.edges),
        rotation=tuple(tuple(order) for order in model.rotation),
        boundary_count=model.boundary_count,
    )


def from_json(text: str) -> PlabicGraph:
    """
    Parse a plabic graph document.

    Raises:
        PlabicFormatError: If the document is malformed
        NonTrivalentError: If a vertex does not have three edges
    """
    try:
        model = PlabicGraphModel.model_validate_json(text)
    except ValidationError as e:
        raise PlabicFormatError(f"Invalid plabic graph document: {e}") from e
    try:
        return from_model(model)
    except IndexError as e:
        raise PlabicFormatError(f"Edge index out of range: {e}") from e
