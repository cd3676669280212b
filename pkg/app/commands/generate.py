import argparse
import logging
from typing import TextIO

from app.config import settings
from app.schemas.command import GenerateCommand
from app.schemas.sequence import SequenceRecord
from app.services.greedy_engine import greedy_sequence, mian_chowla_sequence
from app.services.report_writer import emit_bfile, sequence_csv, sequence_json

logger = logging.getLogger(__name__)

DESCRIPTION = """\
Print the greedy B_h-set a_0(h), ..., a_k(h).
Indices start at 0 (a_0 = 0 is included); JSON output carries "offset": 0
and CSV output an explicit index column. With --mian-chowla (h = 2 only) the
Mian-Chowla sequence is printed instead, at offset 1, after checking that it
is the greedy B_2-set shifted up by one.
"""


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "generate",
        help="compute a greedy B_h-set prefix",
        description=DESCRIPTION,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--h", type=int, required=True, help="order h >= 1")
    parser.add_argument("--terms", type=int, required=True, help="compute a_0..a_K")
    parser.add_argument("--format", choices=["bfile", "json", "csv"], default="bfile")
    parser.add_argument("--output", default=None, help="write to this file instead of stdout")
    parser.add_argument("--workers", type=int, default=settings.WORKERS,
                        help="threads evaluating candidate windows (default sequential)")
    parser.add_argument("--mian-chowla", action="store_true", help="print the Mian-Chowla sequence")
    parser.set_defaults(build=build)


def build(args: argparse.Namespace) -> GenerateCommand:
    return GenerateCommand(
        h=args.h,
        terms=args.terms,
        format=args.format,
        output=args.output,
        workers=args.workers,
        mian_chowla=args.mian_chowla,
    )


def _shifted_record(record: SequenceRecord) -> SequenceRecord:
    return SequenceRecord(
        h=record.h,
        k_max=record.k_max,
        offset=1,
        terms=mian_chowla_sequence(record.k_max + 1),
        scan_cap=record.scan_cap + 1,
        elapsed_ms=record.elapsed_ms,
    )


def run(cmd: GenerateCommand, out: TextIO) -> int:
    record = greedy_sequence(cmd.h, cmd.terms, workers=cmd.workers)
    status = 0
    if cmd.mian_chowla:
        shifted = _shifted_record(record)
        if shifted.terms != [a + 1 for a in record.terms]:
            logger.error("Mian-Chowla terms are not the greedy B_2 terms plus one")
            status = 1
        record = shifted

    if cmd.format == "json":
        text = sequence_json(record)
    elif cmd.format == "csv":
        text = sequence_csv(record)
    else:
        text = emit_bfile(record)

    if cmd.output is not None:
        cmd.output.write_text(text)
        logger.info("wrote %d terms to %s", len(record.terms), cmd.output)
    else:
        out.write(text)
    return status
