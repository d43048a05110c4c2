"""Command-line surface."""

import argparse
import sys
from collections.abc import Sequence
from typing import NoReturn

from weightdirac.config import settings
from weightdirac.core.errors import EXIT_CONFIG, ConfigError
from weightdirac.core.reports import FORMATS

COMMANDS = ("describe", "cohomology", "dirac", "index", "pair", "verify")


class JobArgumentParser(argparse.ArgumentParser):
    """Usage errors are configuration errors: exit 1 with an ErrorResponse line."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        print(ConfigError(f"usage: {message}").to_response().model_dump_json(), file=sys.stderr)
        self.exit(EXIT_CONFIG)


def build_parser() -> argparse.ArgumentParser:
    parser = JobArgumentParser(
        prog="weightdirac",
        description="Exact Dirac cohomology, nilradical cohomology, spin indices and "
        "Euler-Poincare pairings of weight modules.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    parser.add_argument("command", choices=COMMANDS, help="What to compute")
    parser.add_argument("--config", required=True, help="Job file")
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=FORMATS,
        default=None,
        help=f"Output format (default: {settings.output_format})",
    )
    parser.add_argument(
        "--parallel",
        type=int,
        default=None,
        help=f"Worker threads over weight blocks (default: {settings.max_workers})",
    )
    parser.add_argument("--out", default=None, help="Write results here instead of stdout")
    parser.add_argument("--log-level", default=None, help=f"Log level (default: {settings.log_level})")
    return parser


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """Parse arguments; usage errors exit with the configuration status 1."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.parallel is not None and args.parallel < 1:
        parser.error("--parallel must be at least 1")
    return args
