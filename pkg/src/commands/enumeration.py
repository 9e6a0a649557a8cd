"""
enumerate: list every polygon up to an area, or only the extremal ones.
"""
import json
from pathlib import Path

from src.config import config
from src.services.billiards import billiards_permutation
from src.services.enumeration import enumerate_polyiamonds, extremal_search, reconcile_orbits
from src.services.verification import CSV_COLUMNS, polygon_record, records_frame
from src.utils.logger import get_logger

from src.commands.common import emit, positive_int

logger = get_logger("commands.enumerate")


def _format(records, counts, args) -> str:
    if args.report == "csv":
        return records_frame(records).to_csv(index=False)
    document = {
        "max_area": args.max_area,
        "mode": args.mode,
        "counts": {str(area): count for area, count in sorted(counts.items())},
        "polygons": [r.model_dump(mode="json") for r in records],
    }
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def run(args) -> int:
    if args.max_area is None:
        args.max_area = config.get_max_area()
    if args.threads is None:
        args.threads = config.get_threads()

    if args.reconcile:
        table = reconcile_orbits(args.max_area, args.threads)
        document = {str(area): {"fixed": fixed, "orbit_sum": orbits} for area, (fixed, orbits) in table.items()}
        emit(json.dumps(document, indent=2, sort_keys=True) + "\n", args.out)
        return 0

    if args.objective:
        if args.mode != "free":
            raise ValueError("--objective searches free polygons only")
        polygons = [entry.polygon for entry in extremal_search(args.max_area, args.objective, args.threads)]
    else:
        polygons = enumerate_polyiamonds(args.max_area, args.mode, args.threads)

    records = []
    counts = {area: 0 for area in range(1, args.max_area + 1)}
    for P in polygons:
        records.append(polygon_record(P, billiards_permutation(P), args.mode))
        counts[P.area] += 1
    logger.info(f"Listed {len(records)} polygons")
    emit(_format(records, counts, args), args.out)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "enumerate",
        help="Enumerate simply connected polyiamonds",
        description="List every polygon up to --max-area with its cycle data.",
        epilog="CSV columns: " + ", ".join(CSV_COLUMNS),
    )
    parser.add_argument("--max-area", type=positive_int, help="Largest area (default DEFAULT_MAX_AREA)")
    parser.add_argument("--mode", choices=["fixed", "free"], default="free")
    parser.add_argument("--report", choices=["csv", "json"], default="csv")
    parser.add_argument("--threads", type=positive_int, help="Worker processes (default DEFAULT_THREADS)")
    parser.add_argument(
        "--objective",
        choices=["min_area_slack", "min_perim_slack"],
        help="Only the polygons attaining the smallest slack",
    )
    parser.add_argument(
        "--reconcile",
        action="store_true",
        help="Print fixed counts next to summed free orbit sizes per area",
    )
    parser.add_argument("--out", type=Path, help="Output file (stdout when omitted)")
    parser.set_defaults(func=run)
