"""Command-line entry point

Exit codes: 0 satisfied (or command succeeded), 1 violated, 2 error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from robustlab import __version__
from robustlab.cli import casestudy, check, evaluate, learn
from robustlab.core.config import settings
from robustlab.core.exceptions import RobustlabError
from robustlab.core.logger import setup_logging
from robustlab.services.metrics import write_metrics

logger = logging.getLogger(__name__)

EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="robustlab",
        description="STL robustness with pluggable conjunction metrics, property checks and guided PI2",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=settings.log_level, help="DEBUG, INFO, WARNING, ...")
    parser.add_argument("--metrics-file", default=None,
                        help="Write Prometheus metrics here when the command finishes")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (evaluate, check, learn, casestudy):
        command.add_parser(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help/--version exit 0; usage errors map onto the error code
        return 0 if e.code == 0 else EXIT_ERROR

    setup_logging(args.log_level)
    try:
        code = args.func(args)
    except (RobustlabError, OSError) as e:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_ERROR
    finally:
        if args.metrics_file:
            write_metrics(args.metrics_file)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
