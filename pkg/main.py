import argparse
import sys
from collections.abc import Sequence
from typing import IO

from app.api.commands import groups, homs, moduli, pipeline, track, words
from app.api.exception_handlers import handle
from app.api.exceptions import EXIT_MALFORMED, EXIT_OK
from app.api.tools.json_formatter import dumps
from app.custom_logging import get_logger, set_level
from app.jobs.dump_demos import dump_demos_job
from app.jobs.freeze_golden import freeze_golden_job
from app.settings import assert_never, settings

__version__ = "0.3.0"

logger = get_logger("main")


def build_argparser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kfree", description="k-free braid group invariants")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ...")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (groups, words, homs, track, moduli, pipeline):
        module.register(subparsers)
    return parser


def run(argv: Sequence[str] | None = None, stream: IO[str] | None = None) -> int:
    out = stream or sys.stdout
    try:
        args = build_argparser().parse_args(argv)
    except SystemExit as err:
        # argparse already printed usage; a bad command line is malformed input
        return EXIT_OK if err.code in (0, None) else EXIT_MALFORMED
    if args.log_level is not None:
        set_level(args.log_level.upper())
    try:
        document = args.handler(args)
    except Exception as exc:
        return handle(exc, out)
    out.write(dumps(document).decode())
    return EXIT_OK


def run_job() -> None:
    logger.info("running job %s", settings.job)
    match settings.job:
        case "freeze_golden":
            freeze_golden_job()
        case "dump_demos":
            dump_demos_job()
        case None:
            pass
        case _:
            assert_never(settings.job)


if __name__ == "__main__":
    if settings.job is not None:
        run_job()
        sys.exit(EXIT_OK)
    sys.exit(run())
