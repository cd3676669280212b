"""Serialization of sequences and reports: OEIS b-files, CSV, JSON and the
jinja2 text templates."""
import csv
import io
from pathlib import Path
from typing import Optional, TextIO

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from app.errors import InvalidInputError
from app.schemas.sequence import SequenceRecord
from app.schemas.theorem import TheoremReport

BASE_DIR = Path(__file__).resolve().parent.parent
templates = Environment(
    loader=FileSystemLoader(BASE_DIR / "templates"),
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)

THEOREM_COLUMNS = ("h", "a4_greedy", "a4_formula", "a4_witness", "match")


def render(template_name: str, **context) -> str:
    return templates.get_template(template_name).render(**context)


def emit_bfile(record: SequenceRecord, sink: Optional[TextIO] = None) -> str:
    """One "index value" line per term, index from record.offset, every line
    newline-terminated."""
    text = "".join(f"{record.offset + i} {a}\n" for i, a in enumerate(record.terms))
    if sink is not None:
        sink.write(text)
    return text


def read_bfile(text: str) -> list[int]:
    terms: list[int] = []
    expected: Optional[int] = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidInputError(f"b-file line {lineno}: expected 'index value', got {line!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError as e:
            raise InvalidInputError(f"b-file line {lineno}: {e}") from e
        if expected is not None and index != expected:
            raise InvalidInputError(f"b-file line {lineno}: index {index}, expected {expected}")
        expected = index + 1
        terms.append(value)
    return terms


def read_set_file(text: str) -> list[int]:
    """One nonnegative decimal integer per line; '#' starts a comment."""
    values: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.isdigit() or not line.isascii():
            raise InvalidInputError(f"set file line {lineno}: not a nonnegative integer: {line!r}")
        values.append(int(line))
    return values


def sequence_json(record: SequenceRecord) -> str:
    return record.model_dump_json(by_alias=True) + "\n"


def sequence_csv(record: SequenceRecord) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["h", "index", "value"])
    for i, a in enumerate(record.terms):
        writer.writerow([record.h, record.offset + i, a])
    return buffer.getvalue()


def theorem_csv(report: TheoremReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(THEOREM_COLUMNS)
    for row in report.rows:
        witness = "" if row.a4_witness is None else row.a4_witness
        writer.writerow([row.h, row.a4_greedy, row.a4_formula, witness, "MATCH" if row.match else "MISMATCH"])
    return buffer.getvalue()


def theorem_json(report: TheoremReport) -> str:
    return report.model_dump_json() + "\n"
