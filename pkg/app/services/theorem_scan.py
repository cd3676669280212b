import logging
from concurrent.futures import ProcessPoolExecutor

from app.errors import InvalidInputError
from app.schemas.theorem import TheoremReport, TheoremRow
from app.services.closed_forms import closed_form_term
from app.services.collision_oracles import min_unblocked
from app.services.greedy_engine import greedy_sequence

logger = logging.getLogger(__name__)


def theorem_row(h: int) -> TheoremRow:
    """a_4(h) three ways: greedy construction, closed form and least
    unblocked candidate (the last one from h = 2 on)."""
    greedy = greedy_sequence(h, 4).terms[4]
    formula = closed_form_term(h, 4)
    witness = min_unblocked(h) if h >= 2 else None
    match = greedy == formula and (witness is None or witness == formula)
    if not match:
        logger.warning("h=%d: greedy=%d formula=%d witness=%s", h, greedy, formula, witness)
    return TheoremRow(h=h, a4_greedy=greedy, a4_formula=formula, a4_witness=witness, match=match)


def theorem_scan(h_min: int, h_max: int, workers: int = 1) -> TheoremReport:
    if h_min < 1 or h_max < h_min:
        raise InvalidInputError(f"invalid h-range [{h_min}, {h_max}]")
    hs = range(h_min, h_max + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(theorem_row, hs))
    else:
        rows = [theorem_row(h) for h in hs]

    # whether a_4(h) < a_4(h+1) in general is open; recorded, not enforced
    for row, following in zip(rows, rows[1:]):
        row.increases_next = row.a4_greedy < following.a4_greedy
    report = TheoremReport(h_min=h_min, h_max=h_max, rows=rows)
    if report.monotonicity_gaps:
        logger.warning("a_4 does not increase after h in %s", report.monotonicity_gaps)
    return report
