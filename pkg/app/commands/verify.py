import argparse
import logging
import sys
from math import comb
from pathlib import Path
from typing import TextIO

from app.config import settings
from app.errors import InternalError, InvalidInputError
from app.schemas.command import VerifyCommand
from app.services.bh_core import (
    build_support_table,
    first_collision,
    normalize_set,
    verify_by_cardinality,
)
from app.services.report_writer import read_set_file, render

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "verify",
        help="check whether a set is a B_h-set",
        description="Read a set (one integer per line, '#' comments, '-' for stdin) "
                    "and check the B_h property by brute force and by sumset cardinality. "
                    "Exit status 0 if it is a B_h-set, 1 if not.",
    )
    parser.add_argument("--h", type=int, required=True, help="order h >= 1")
    parser.add_argument("--set", dest="set_path", required=True, help="set file")
    parser.set_defaults(build=build)


def build(args: argparse.Namespace) -> VerifyCommand:
    return VerifyCommand(h=args.h, set_path=args.set_path)


def _read(set_path: str) -> str:
    if set_path == "-":
        return sys.stdin.read()
    try:
        return Path(set_path).read_text(encoding="ascii")
    except UnicodeDecodeError as e:
        raise InvalidInputError(f"set file is not ASCII: {e}") from e


def run(cmd: VerifyCommand, out: TextIO) -> int:
    h = cmd.h
    elements = normalize_set(read_set_file(_read(cmd.set_path)))
    multiset_count = comb(len(elements) + h - 1, h)

    # the B_h property is translation invariant; the fast verifier needs 0
    shift = elements[0]
    if shift:
        logger.warning("set does not contain 0, translating by -%d", shift)
    table = build_support_table([a - shift for a in elements], h)
    cardinality = verify_by_cardinality(table)

    collision = None
    if multiset_count <= settings.BRUTEFORCE_MAX_MULTISETS:
        collision = first_collision(elements, h)
        brute_force = f"B_{h}" if collision is None else f"not B_{h}"
        if (collision is None) != cardinality:
            raise InternalError(f"verifiers disagree on {elements} for h={h}")
    else:
        brute_force = f"skipped ({multiset_count} multisets)"

    out.write(render(
        "verify.txt.j2",
        h=h,
        size=len(elements),
        is_bh=cardinality,
        collision=collision,
        brute_force=brute_force,
        cardinality=cardinality,
        support_size=len(table.support(h)),
        multiset_count=multiset_count,
        shift=shift,
    ))
    return 0 if cardinality else 1
