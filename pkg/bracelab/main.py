"""
BraceLab command line.

Every command family lives in bracelab/cli and registers its subcommands
here. Exit codes: 0 success, 1 verification failure, 2 input error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from .cli import braces, catalog, engel, series, ybe
from .core.config import settings
from .core.exceptions import InputError, VerificationFailure
from .core.logging import setup_logging

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bracelab",
        description="Finite braces, their Yang-Baxter solutions and the free-algebra lab",
    )
    parser.add_argument("--log-level", default=None, help=f"Logging level (default: {settings.LOG_LEVEL})")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Command families
    braces.register(subparsers)
    series.register(subparsers)
    ybe.register(subparsers)
    catalog.register(subparsers)
    engel.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level or settings.LOG_LEVEL, settings.LOG_FILE)
    logger.debug(f"Running {args.command}")

    try:
        return args.handler(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except VerificationFailure as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
