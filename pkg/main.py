"""
Lazard CAD: Command-Line Interface

Reads a problem file (phase_6.problem), runs one command on it
(phase_6.runner) and prints the report (phase_6.formatter).

Usage:
    python main.py problems/circle.txt cad
    python main.py problem.txt valuation --point 0,0,0 --output json
    python main.py problem.txt cad --max-level 2 --workers 4 --timing

Exit codes:
    0  success
    1  malformed input (file, flags, polynomials, point)
    2  internal arithmetic failure

Defaults for --seed, --probes, --output, --workers and --log-level come from
LAZARD_CAD_* environment variables, optionally set in a .env file.
"""

import argparse
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv

from phase_6.config import LOG_LEVELS, OUTPUT_FORMATS, Settings, load_settings
from phase_6.formatter import ReportFormatter
from phase_6.problem import parse_point, parse_problem
from phase_6.runner import COMMANDS, EXIT_INPUT_ERROR, RunReport, run_command

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lazard-cad",
        description="Valuation-invariant cylindrical algebraic decomposition with the Lazard projection.",
    )
    parser.add_argument("file", help="problem file ('vars:' header, one polynomial per line)")
    parser.add_argument("command", choices=list(COMMANDS), help="operation to run")
    parser.add_argument("--output", choices=OUTPUT_FORMATS, help="report format")
    parser.add_argument("--seed", type=int, help="seed for delineability probes")
    parser.add_argument("--probes", type=int, help="probe points per cell (0 disables the check)")
    parser.add_argument("--point", help="comma-separated rational coordinates, e.g. 0,1/2")
    parser.add_argument("--max-level", type=int, help="stop after projecting to this level")
    parser.add_argument("--workers", type=int, help="threads used to lift one level")
    parser.add_argument("--timing", action="store_true", help="include elapsed time in the report")
    parser.add_argument("--log-level", choices=LOG_LEVELS, help="logging verbosity")
    return parser


def _settings(args: argparse.Namespace) -> Settings:
    return load_settings().override(
        seed=args.seed,
        probes=args.probes,
        output=args.output,
        workers=args.workers,
        log_level=args.log_level,
    )


def execute(args: argparse.Namespace, settings: Settings) -> RunReport:
    """Parse the inputs named by `args` and run the command; input failures become reports."""
    try:
        with open(args.file, encoding="utf-8") as handle:
            problem = parse_problem(handle.read())
        point = parse_point(args.point) if args.point is not None else None
    except (OSError, ValueError) as e:
        logger.warning(f"Could not read {args.file}: {e}")
        return RunReport(command=args.command, exit_code=EXIT_INPUT_ERROR, error=str(e))
    return run_command(problem, args.command, settings, point=point, max_level=args.max_level)


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    try:
        settings = _settings(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    logging.basicConfig(level=settings.log_level, format="%(levelname)s: %(message)s")
    report = execute(args, settings)
    sys.stdout.write(ReportFormatter(settings.output, include_timing=args.timing).format(report))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
