"""
render: draw a polygon and its trajectories as SVG.
"""
from pathlib import Path

from src.config import config
from src.models import RenderOptions
from src.services.render import render_svg
from src.utils.io import load_polygon

from src.commands.common import emit, positive_float


def run(args) -> int:
    P = load_polygon(args.polygon)
    opts = RenderOptions(
        scale=args.scale or config.get_render_scale(),
        show_trajectories=not args.no_trajectories,
        show_plabic=args.plabic,
        palette=config.get_render_palette(),
        margin=config.get_render_margin(),
    )
    emit(render_svg(P, opts), args.out)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "render",
        help="Render a polygon to SVG",
        description="Draw the polygon, one colored group per trajectory, optionally the dual plabic graph.",
    )
    parser.add_argument("polygon", type=Path, help="Polygon file")
    parser.add_argument("--out", type=Path, help="SVG file (stdout when omitted)")
    parser.add_argument("--scale", type=positive_float, help="Pixels per unit pane (default RENDER_SCALE)")
    parser.add_argument("--plabic", action="store_true", help="Overlay the dual plabic graph")
    parser.add_argument("--no-trajectories", action="store_true", help="Draw the polygon only")
    parser.set_defaults(func=run)
