import argparse
from typing import TextIO

from app.schemas.command import Lemma1Command
from app.services.closed_forms import closed_form_term
from app.services.collision_oracles import lower_bound_interval_family
from app.services.report_writer import render


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "lemma1",
        help="blocked intervals proving a_4(h) is at least the closed form",
        description="Print the labeled interval family below a_4(h), its merged union "
                    "and the containment checks. Exit status 0 iff every check holds.",
    )
    parser.add_argument("--h", type=int, required=True, help="order h >= 2")
    parser.set_defaults(build=build)


def build(args: argparse.Namespace) -> Lemma1Command:
    return Lemma1Command(h=args.h)


def run(cmd: Lemma1Command, out: TextIO) -> int:
    family = lower_bound_interval_family(cmd.h)
    out.write(render("lemma1.txt.j2", family=family, a4=closed_form_term(cmd.h, 4)))
    return 0 if family.all_hold else 1
