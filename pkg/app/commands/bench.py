import argparse
from typing import TextIO

from app.config import settings
from app.schemas.command import BenchCommand
from app.services.greedy_engine import benchmark_scan
from app.services.report_writer import render


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bench", help="measure candidate-scan throughput")
    parser.add_argument("--h", type=int, required=True)
    parser.add_argument("--terms", type=int, default=4, help="table over a_0..a_K (default 4)")
    parser.add_argument("--candidates", type=int, default=settings.BENCH_CANDIDATES)
    parser.set_defaults(build=build)


def build(args: argparse.Namespace) -> BenchCommand:
    return BenchCommand(h=args.h, terms=args.terms, candidates=args.candidates)


def run(cmd: BenchCommand, out: TextIO) -> int:
    report = benchmark_scan(cmd.h, cmd.terms, cmd.candidates)
    out.write(render("bench.txt.j2", report=report))
    return 0
