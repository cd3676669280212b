import argparse
from typing import TextIO

from app.schemas.command import WitnessCommand
from app.services.collision_oracles import collision_witness


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "witness",
        help="search a collision blocking candidate c after {0, 1, h+1, h^2+h+1}",
    )
    parser.add_argument("--h", type=int, required=True)
    parser.add_argument("--c", type=int, required=True)
    parser.set_defaults(build=build)


def build(args: argparse.Namespace) -> WitnessCommand:
    return WitnessCommand(h=args.h, c=args.c)


def run(cmd: WitnessCommand, out: TextIO) -> int:
    witness = collision_witness(cmd.h, cmd.c)
    out.write("none\n" if witness is None else witness.describe() + "\n")
    return 0
