"""
Command-line entry point for triangular-grid billiards.

    python app.py analyze data/fixtures/hex_with_tail.json --start-pane 1
    python app.py verify --max-area 10 --report csv --out sweep.csv
"""
import sys
import time
from typing import Optional, Sequence

from src.commands import analyze, enumeration, glue, render, verify
from src.commands.common import CliParser, UsageError
from src.geometry.polygon import PolygonValidationError
from src.utils.io import InputFormatError
from src.utils.logger import get_logger, set_level

logger = get_logger("app")

EXIT_INPUT_ERROR = 1


def build_parser() -> CliParser:
    parser = CliParser(
        prog="trigrid",
        description="Billiards on triangular-grid polygons: permutations, trajectories and inequality sweeps.",
    )
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    analyze.register(subparsers)
    enumeration.register(subparsers)
    verify.register(subparsers)
    render.register(subparsers)
    glue.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv and run one subcommand.

    Returns:
        0 on success, 1 on bad input, 2/3 from verify on violations
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_INPUT_ERROR
    except SystemExit as e:
        # --help
        return e.code or 0

    if args.verbose:
        set_level("DEBUG")

    start_time = time.time()
    logger.debug(f"Running {args.command}")
    try:
        code = args.func(args)
    except (InputFormatError, PolygonValidationError, ValueError, OSError) as e:
        logger.debug(f"{args.command} failed: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    logger.debug(f"{args.command} finished with exit code {code} in {time.time() - start_time:.2f}s")
    return code


if __name__ == "__main__":
    sys.exit(main())
