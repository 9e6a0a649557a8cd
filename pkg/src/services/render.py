"""
SVG rendering of grid polygons with their trajectories and dual plabic graph.
"""
from typing import Optional

from src.geometry.grid import (
    DPoint,
    Orient,
    cell_panes,
    cell_vertices,
    pane_cells,
    pane_endpoints,
    pane_key,
    pane_midpoint,
    to_cartesian,
)
from src.geometry.polygon import GridPolygon, interior_panes
from src.models import RenderOptions
from src.services.billiards import billiards_permutation, trajectory
from src.utils.logger import get_logger

logger = get_logger("services.render")

svg_header = """<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%.3f" height="%.3f" viewBox="0 0 %.3f %.3f" version="1.1" xmlns="http://www.w3.org/2000/svg">
"""

svg_footer = """</svg>
"""

DISC_RADIUS = 0.12


class _Canvas:
    """Maps lattice points to SVG coordinates (y axis pointing down)."""

    def __init__(self, points: list[DPoint], scale: float, margin: float):
        xs, ys = zip(*(to_cartesian(p) for p in points))
        self.min_x, self.max_y = min(xs), max(ys)
        self.scale = scale
        self.margin = margin
        self.width = 2 * margin + (max(xs) - self.min_x) * scale
        self.height = 2 * margin + (self.max_y - min(ys)) * scale

    def xy(self, x: float, y: float) -> tuple[float, float]:
        return self.margin + (x - self.min_x) * self.scale, self.margin + (self.max_y - y) * self.scale

    def point(self, p: DPoint) -> tuple[float, float]:
        return self.xy(*to_cartesian(p))

    def line(self, a: tuple, b: tuple, css_class: str, extra: str = "") -> str:
        (x1, y1), (x2, y2) = a, b
        return '    <line class="%s" x1="%.3f" y1="%.3f" x2="%.3f" y2="%.3f"%s/>\n' % (
            css_class, x1, y1, x2, y2, extra,
        )


def _centroid(cell) -> tuple[float, float]:
    pts = [to_cartesian(v) for v in cell_vertices(cell)]
    return sum(x for x, _ in pts) / 3, sum(y for _, y in pts) / 3


def _cells_layer(P: GridPolygon, canvas: _Canvas) -> str:
    panes = sorted({p for c in P.cells for p in cell_panes(c)}, key=pane_key)
    out = ['  <g class="cells" stroke="#cccccc" stroke-width="1">\n']
    for p in panes:
        s, t = pane_endpoints(p)
        out.append(canvas.line(canvas.point(s), canvas.point(t), "cell-edge"))
    out.append("  </g>\n")
    return "".join(out)


def _boundary_layer(P: GridPolygon, canvas: _Canvas) -> str:
    coords = [canvas.point(v) for v in P.walk[:-1]]
    d = "M " + " L ".join("%.3f %.3f" % xy for xy in coords) + " Z"
    return '  <path class="boundary" d="%s" fill="none" stroke="#000000" stroke-width="2"/>\n' % d


def _trajectory_layer(P: GridPolygon, canvas: _Canvas, palette: list[str]) -> str:
    out = []
    for k, c in enumerate(billiards_permutation(P).cycles):
        color = palette[k % len(palette)]
        out.append('  <g class="trajectory" stroke="%s" stroke-width="2">\n' % color)
        for s, t in trajectory(P, c).segments:
            out.append(canvas.line(canvas.point(s), canvas.point(t), "segment"))
        out.append("  </g>\n")
    return "".join(out)


def _plabic_layer(P: GridPolygon, canvas: _Canvas) -> str:
    out = ['  <g class="plabic" stroke="#000000" stroke-width="1">\n']
    for p in sorted(interior_panes(P), key=pane_key):
        up, down = pane_cells(p)
        out.append(canvas.line(canvas.xy(*_centroid(up)), canvas.xy(*_centroid(down)), "plabic-edge"))
    for p in P.boundary:
        out.append(canvas.line(canvas.xy(*_centroid(P.inner_cell[p])), canvas.point(pane_midpoint(p)), "plabic-stub"))
    r = DISC_RADIUS * canvas.scale
    for c in P.sorted_cells():
        x, y = canvas.xy(*_centroid(c))
        fill = "#000000" if c.orient == Orient.U else "#ffffff"
        out.append('    <circle class="plabic-vertex" cx="%.3f" cy="%.3f" r="%.3f" fill="%s"/>\n' % (x, y, r, fill))
    out.append("  </g>\n")
    return "".join(out)


def render_svg(P: GridPolygon, opts: Optional[RenderOptions] = None) -> str:
    """
    Render a polygon as an SVG document.

    Trajectories are colored by cycle order (smallest pane first), cycling
    through the palette. Output is byte-identical for identical inputs.

    Args:
        P: Grid polygon
        opts: Render options; defaults when None

    Returns:
        SVG 1.1 document text
    """
    opts = opts or RenderOptions()
    points = list(P.walk[:-1])
    canvas = _Canvas(points, opts.scale, opts.margin)
    parts = [svg_header % (canvas.width, canvas.height, canvas.width, canvas.height)]
    parts.append(_cells_layer(P, canvas))
    parts.append(_boundary_layer(P, canvas))
    if opts.show_trajectories:
        parts.append(_trajectory_layer(P, canvas, opts.palette))
    if opts.show_plabic:
        parts.append(_plabic_layer(P, canvas))
    parts.append(svg_footer)
    logger.debug(f"Rendered polygon area={P.area} ({canvas.width:.0f}x{canvas.height:.0f}px)")
    return "".join(parts)
