"""
glue: join two polygon files along one boundary pane each.
"""
from pathlib import Path

from src.geometry.polygon import glue as glue_polygons
from src.utils.io import dump_polygon, load_polygon, save_polygon
from src.utils.logger import get_logger

from src.commands.common import boundary_pane, emit, positive_int

logger = get_logger("commands.glue")


def run(args) -> int:
    P1 = load_polygon(args.first)
    P2 = load_polygon(args.second)
    p1 = boundary_pane(P1, args.pane_a, "--pane-a")
    p2 = boundary_pane(P2, args.pane_b, "--pane-b")
    union = glue_polygons(P1, p1, P2, p2)
    logger.info(f"Glued area {P1.area} and area {P2.area} into area {union.area}, perim {union.perim}")
    if args.out is not None:
        save_polygon(union, args.out)
    else:
        emit(dump_polygon(union), None)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "glue",
        help="Glue two polygons along a pane",
        description="Move the second polygon so its pane lands on the first polygon's pane, and write the union.",
    )
    parser.add_argument("first", type=Path, help="Polygon that stays in place")
    parser.add_argument("second", type=Path, help="Polygon that is moved")
    parser.add_argument("--pane-a", type=positive_int, required=True, help="1-based boundary index in the first polygon")
    parser.add_argument("--pane-b", type=positive_int, required=True, help="1-based boundary index in the second polygon")
    parser.add_argument("--out", type=Path, help="Polygon file for the union (stdout when omitted)")
    parser.set_defaults(func=run)
