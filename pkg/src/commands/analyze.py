"""
analyze: billiards report of one polygon file.
"""
import json
from pathlib import Path

from src.services.billiards import ConsistencyError, analyze as analyze_polygon, billiards_permutation
from src.services.plabic import dual, export, trip_permutation
from src.utils.io import load_polygon
from src.utils.logger import get_logger

from src.commands.common import emit, positive_int

logger = get_logger("commands.analyze")


def run(args) -> int:
    P = load_polygon(args.polygon)
    start = None
    if args.start_pane is not None:
        if args.start_pane > P.perim:
            raise ValueError(f"--start-pane must be between 1 and {P.perim}, got {args.start_pane}")
        start = args.start_pane - 1

    report = analyze_polygon(P, start)
    print(json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True))

    if args.plabic:
        G = dual(P)
        if trip_permutation(G) != billiards_permutation(P):
            raise ConsistencyError("Trip permutation of the dual graph differs from the billiards permutation")
        fmt = "dot" if args.out is not None and args.out.suffix == ".dot" else "json"
        emit(export(G, fmt), args.out)
        logger.info(f"Dual plabic graph agrees with the billiards permutation ({G.n} boundary points)")
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "analyze",
        help="Billiards permutation, trajectories and slacks of one polygon",
        description="Print the billiards report of a polygon file as json.",
    )
    parser.add_argument("polygon", type=Path, help="Polygon file {\"cells\": [[i, j, \"U\"|\"D\"], ...]}")
    parser.add_argument(
        "--start-pane",
        type=positive_int,
        help="1-based canonical boundary index to label as pane 1 in the output",
    )
    parser.add_argument(
        "--plabic",
        action="store_true",
        help="Cross-check against the dual plabic graph and export it (to --out, .dot for graphviz)",
    )
    parser.add_argument("--out", type=Path, help="Where to write the plabic graph (stdout when omitted)")
    parser.set_defaults(func=run)
