import argparse
from typing import TextIO

from app.config import settings
from app.schemas.command import TheoremCommand
from app.services.report_writer import render, theorem_csv, theorem_json
from app.services.theorem_scan import theorem_scan


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "theorem",
        help="compare greedy, closed-form and witness-search values of a_4(h)",
        description="For each h in the range print a_4(h) from the greedy engine, the "
                    "closed form and the least unblocked candidate (h >= 2). "
                    "Exit status 0 iff every row matches.",
    )
    parser.add_argument("--h-min", type=int, required=True)
    parser.add_argument("--h-max", type=int, required=True)
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text")
    parser.add_argument("--output", default=None, help="write to this file instead of stdout")
    parser.add_argument("--workers", type=int, default=settings.WORKERS,
                        help="processes scanning different h (default sequential)")
    parser.set_defaults(build=build)


def build(args: argparse.Namespace) -> TheoremCommand:
    return TheoremCommand(
        h_min=args.h_min,
        h_max=args.h_max,
        format=args.format,
        output=args.output,
        workers=args.workers,
    )


def run(cmd: TheoremCommand, out: TextIO) -> int:
    report = theorem_scan(cmd.h_min, cmd.h_max, workers=cmd.workers)
    if cmd.format == "json":
        text = theorem_json(report)
    elif cmd.format == "csv":
        text = theorem_csv(report)
    else:
        text = render("theorem.txt.j2", report=report)
    if cmd.output is not None:
        cmd.output.write_text(text)
    else:
        out.write(text)
    return 0 if report.all_match else 1
