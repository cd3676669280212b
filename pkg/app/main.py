import argparse
import logging
import sys
from typing import Callable, Optional, TextIO

from pydantic import BaseModel, ValidationError

from app.commands import bench, generate, lemma1, theorem, verify, witness
from app.config import settings
from app.errors import ClosedFormRangeError, InternalError, InvalidInputError

logger = logging.getLogger("app")

COMMANDS = {
    "generate": generate,
    "verify": verify,
    "theorem": theorem,
    "witness": witness,
    "lemma1": lemma1,
    "bench": bench,
}

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCES = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greedy-bh",
        description="Greedy B_h-sets: construction, verification and a_4(h) checks.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress to stderr (-vv for debug)")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for module in COMMANDS.values():
        module.register(subparsers)
    return parser


def configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(level=level, format=settings.LOG_FORMAT, stream=sys.stderr)


def dispatch(cmd: BaseModel, out: TextIO) -> int:
    runner: Callable[[BaseModel, TextIO], int] = COMMANDS[cmd.subcommand].run
    return runner(cmd, out)


def main(argv: Optional[list[str]] = None, out: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    configure_logging(args.verbose)

    try:
        cmd = args.build(args)
    except ValidationError as e:
        print(f"invalid arguments: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return dispatch(cmd, out)
    except (InvalidInputError, ClosedFormRangeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OverflowError, MemoryError) as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCES
    except (InternalError, ValidationError) as e:
        logger.error("internal error: %s", e)
        return EXIT_FAILURE
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
