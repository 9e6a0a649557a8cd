"""
verify: sweep all polygons up to an area and check every inequality.
"""
import json
import sys
from pathlib import Path

from src.config import config
from src.services.verification import CSV_COLUMNS, summary_json, verify_suite, write_csv
from src.utils.logger import get_logger

from src.commands.common import emit, positive_int

logger = get_logger("commands.verify")


def run(args) -> int:
    max_area = args.max_area or config.get_max_area()
    threads = args.threads or config.get_threads()

    report = verify_suite(max_area, args.mode, threads)
    if args.report == "csv":
        emit(write_csv(report), args.out)
    else:
        emit(summary_json(report), args.out)

    if args.plot is not None:
        # matplotlib is only needed here
        from src.services.charts import plot_sweep

        plot_sweep(report.records, args.plot)

    if report.offenders:
        sys.stderr.write("Counterexamples:\n")
        sys.stderr.write(json.dumps(report.offenders, indent=2, sort_keys=True) + "\n")
    logger.info(f"Exit code {report.exit_code}")
    return report.exit_code


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "verify",
        help="Check the cycle inequalities on every polygon up to an area",
        description=(
            "Exit codes: 0 clean, 2 a proven inequality failed, "
            "3 only the perimeter conjecture failed, 1 bad input."
        ),
        epilog="CSV columns: " + ", ".join(CSV_COLUMNS),
    )
    parser.add_argument("--max-area", type=positive_int, help="Largest area (default DEFAULT_MAX_AREA)")
    parser.add_argument("--mode", choices=["fixed", "free"], default="free")
    parser.add_argument("--report", choices=["csv", "json"], default="json")
    parser.add_argument("--threads", type=positive_int, help="Worker processes (default DEFAULT_THREADS)")
    parser.add_argument("--plot", type=Path, help="Also save an area/perimeter vs cycles chart")
    parser.add_argument("--out", type=Path, help="Output file (stdout when omitted)")
    parser.set_defaults(func=run)
