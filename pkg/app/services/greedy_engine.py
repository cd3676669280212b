import logging
import time
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from math import comb
from typing import Optional

from app.config import settings
from app.errors import InternalError, InvalidInputError
from app.schemas.sequence import SequenceRecord
from app.schemas.theorem import BenchReport
from app.services.bh_core import (
    SumSupportTable,
    admissible,
    build_support_table,
    insert_element,
    is_bh_set_bruteforce,
    verify_by_cardinality,
)
from app.services.closed_forms import upper_bound_sum

logger = logging.getLogger(__name__)


class GreedyState:
    """Terms a_0..a_k of a greedy run together with their support table.

    Owned by one caller; candidate checks may share the table read-only.
    """

    def __init__(self, h: int, dense_limit_bits: Optional[int] = None):
        if h < 1:
            raise InvalidInputError(f"h must be a positive integer, got {h}")
        self.h = h
        self.dense_limit_bits = dense_limit_bits
        self.terms: list[int] = [0]
        self.table: SumSupportTable = build_support_table([0], h, dense_limit_bits)

    @property
    def k(self) -> int:
        return len(self.terms) - 1

    def append(self, b: int) -> None:
        table = insert_element(self.table, b, self.dense_limit_bits)
        if not verify_by_cardinality(table):
            raise InternalError(f"terms {self.terms + [b]} lost the B_{self.h} property")
        self.table = table
        self.terms.append(b)


def _scan_sequential(table: SumSupportTable, start: int, cap: int) -> Optional[int]:
    for b in range(start, cap + 1):
        if admissible(table, b):
            return b
    return None


def _scan_windows(
    table: SumSupportTable, start: int, cap: int, workers: int, window: int
) -> Optional[int]:
    check = partial(admissible, table)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for lo in range(start, cap + 1, window):
            batch = range(lo, min(lo + window, cap + 1))
            for b, ok in zip(batch, pool.map(check, batch)):
                if ok:
                    return b
    return None


def next_term(state: GreedyState, workers: int = 1, window: Optional[int] = None) -> int:
    """Append and return the least admissible b > max(terms).

    Every b <= max(terms) is either a term or was rejected for a subset of
    the current terms, and supersets of non-B_h sets are not B_h, so the scan
    starts right after the last term. It stops at 1 + h + ... + h^k, which
    the next term never exceeds; running past it is a bug.
    """
    h = state.h
    start = state.terms[-1] + 1
    cap = upper_bound_sum(h, state.k + 1)
    if workers > 1:
        b = _scan_windows(state.table, start, cap, workers, window or settings.CANDIDATE_WINDOW)
    else:
        b = _scan_sequential(state.table, start, cap)
    if b is None:
        raise InternalError(f"cap exceeded: no admissible term in [{start}, {cap}] for h={h}")
    state.append(b)
    logger.debug("h=%d a_%d=%d (cap %d)", h, state.k, b, cap)
    return b


def greedy_sequence(
    h: int,
    k: int,
    workers: int = 1,
    dense_limit_bits: Optional[int] = None,
) -> SequenceRecord:
    if k < 0:
        raise InvalidInputError(f"k must be nonnegative, got {k}")
    state = GreedyState(h, dense_limit_bits)
    elapsed_ms = [0.0]
    for _ in range(k):
        started = time.perf_counter()
        next_term(state, workers=workers)
        elapsed_ms.append((time.perf_counter() - started) * 1000.0)
    logger.info("h=%d: computed %d terms, last %d", h, k + 1, state.terms[-1])
    return SequenceRecord(
        h=h,
        k_max=k,
        terms=state.terms,
        scan_cap=upper_bound_sum(h, k) if k else 0,
        elapsed_ms=elapsed_ms,
    )


def greedy_bruteforce_oracle(h: int, k: int) -> list[int]:
    """The greedy prefix a_0..a_k with every candidate checked by full
    enumeration. Test-sized inputs only."""
    if h < 1 or k < 0:
        raise InvalidInputError(f"need h >= 1 and k >= 0, got h={h}, k={k}")
    if k and k * comb(k + h, h) * upper_bound_sum(h, k) > settings.BRUTEFORCE_MAX_MULTISETS:
        raise InvalidInputError(f"h={h}, k={k} is beyond the brute-force budget")
    terms = [0]
    while len(terms) <= k:
        cap = upper_bound_sum(h, len(terms))
        for b in range(terms[-1] + 1, cap + 1):
            if is_bh_set_bruteforce(terms + [b], h):
                terms.append(b)
                break
        else:
            raise InternalError(f"cap exceeded: brute force found nothing up to {cap}")
    return terms


def mian_chowla_sequence(n: int) -> list[int]:
    """First n terms of the Mian-Chowla sequence 1, 2, 4, 8, 13, ...: each
    term is the least integer keeping all pairwise sums distinct."""
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    terms: list[int] = []
    sums: set[int] = set()
    candidate = 0
    while len(terms) < n:
        candidate += 1
        new_sums = {candidate + t for t in terms}
        new_sums.add(2 * candidate)
        if sums.isdisjoint(new_sums):
            terms.append(candidate)
            sums |= new_sums
    return terms


def benchmark_scan(h: int, k: int, candidates: int) -> BenchReport:
    """Time admissibility checks for the candidates just above a_k(h)."""
    if candidates < 1:
        raise InvalidInputError(f"candidates must be positive, got {candidates}")
    state = GreedyState(h)
    for _ in range(k):
        next_term(state)
    table = state.table
    start = state.terms[-1] + 1
    started = time.perf_counter()
    for b in range(start, start + candidates):
        admissible(table, b)
    seconds = time.perf_counter() - started
    return BenchReport(
        h=h,
        terms=state.terms,
        backend=table.backend,
        candidates=candidates,
        seconds=seconds,
        candidates_per_second=candidates / seconds if seconds > 0 else float("inf"),
        table_bytes=table.nbytes,
        support_sizes=[len(s) for s in table.supports],
    )
