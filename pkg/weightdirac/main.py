"""Process entry point."""

import sys
from collections.abc import Sequence
from pathlib import Path

from weightdirac.cli import parse_args
from weightdirac.config import settings
from weightdirac.core.config_parser import parse_config
from weightdirac.core.errors import EXIT_OK, ConfigError, VerificationMismatchError, WeightDiracError
from weightdirac.core.executor import execute
from weightdirac.core.reports import emit_report
from weightdirac.logging_config import configure_logging, get_logger

logger = get_logger(__name__)


def _read_config(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc


def _write_output(path: str, payload: bytes) -> None:
    try:
        Path(path).write_bytes(payload)
    except OSError as exc:
        raise ConfigError(f"cannot write output {path}: {exc}") from exc


def main(
argv: Sequence[str] | None = None) -> int:
    """Run one command and return the exit code.

    Results go to stdout or ``--out``; a failure prints one ErrorResponse JSON
    line to stderr.
    """
    args = parse_args(argv)
    configure_logging(args.log_level)
    output_format = args.output_format or settings.output_format
    workers = args.parallel or settings.max_workers
    logger.info(
        "job_started",
        app=settings.app_name,
        version=settings.app_version,
        command=args.command,
        config=args.config,
        workers=workers,
    )
    try:
        config = parse_config(_read_config(args.config))
        result = execute(config, args.command, workers)
        rank = len(config.window.base)
        payload = emit_report(result.records, output_format, result.record_type, rank)
        if args.out:
            _write_output(args.out, payload)
        else:
            sys.stdout.buffer.write(payload)
            sys.stdout.flush()
        if not result.passed:
            raise VerificationMismatchError(f"{args.command} reported at least one failed check", command=args.command)
    except WeightDiracError as exc:
        response = exc.to_response()
        logger.error("job_failed", error_code=response.error_code, detail=response.detail)
        print(response.model_dump_json(), file=sys.stderr)
        return response.exit_code
    return EXIT_OK


def run() -> None:
    """Console script entry."""
    sys.exit(main())


if __name__ == "__main__":
    run()
