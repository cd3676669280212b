"""B_h-sets: representation counts, brute-force verification and the
sumset-support tables behind the fast admissibility test.

Representations are counted as multisets of size h. The definition in terms
of non-decreasing h-tuples a_1 <= ... <= a_h is the same thing: sorting a
multiset gives exactly one such tuple.
"""
import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Optional

from app.config import settings
from app.errors import InvalidInputError, check_int64
from app.services.support_sets import (
    SupportSet,
    convert,
    make_support,
    use_dense,
)

logger = logging.getLogger(__name__)


def normalize_set(values: Iterable[int]) -> tuple[int, ...]:
    """Sort a candidate set, rejecting duplicates, negatives and empty input."""
    elements = sorted(int(v) for v in values)
    if not elements:
        raise InvalidInputError("the set must not be empty")
    if elements[0] < 0:
        raise InvalidInputError(f"negative element {elements[0]}")
    check_int64(elements[-1], "element")
    for a, b in zip(elements, elements[1:]):
        if a == b:
            raise InvalidInputError(f"duplicate element {a}")
    return tuple(elements)


def _check_order(h: int) -> None:
    if h < 1:
        raise InvalidInputError(f"h must be a positive integer, got {h}")


def _checked_range(elements: tuple[int, ...], h: int) -> int:
    """h * max(A); every h-fold sum lies in [0, h * max(A)]."""
    return check_int64(h * elements[-1], "h-fold sum bound")


def count_representations(A: Iterable[int], h: int, n: int) -> int:
    """Number of size-h multisets from A with sum n."""
    _check_order(h)
    elements = normalize_set(A)
    _checked_range(elements, h)
    return sum(1 for combo in combinations_with_replacement(elements, h) if sum(combo) == n)


def representation_counts(A: Iterable[int], h: int) -> dict[int, int]:
    """The representation function of A as a sparse mapping sum -> count."""
    _check_order(h)
    elements = normalize_set(A)
    _checked_range(elements, h)
    counts: dict[int, int] = {}
    for combo in combinations_with_replacement(elements, h):
        total = sum(combo)
        counts[total] = counts.get(total, 0) + 1
    return counts


def first_collision(
    A: Iterable[int], h: int
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The first two distinct size-h multisets with equal sum, in
    lexicographic enumeration order, or None if A is a B_h-set."""
    _check_order(h)
    elements = normalize_set(A)
    _checked_range(elements, h)
    seen: dict[int, tuple[int, ...]] = {}
    for combo in combinations_with_replacement(elements, h):
        total = sum(combo)
        if total in seen:
            return seen[total], combo
        seen[total] = combo
    return None


def is_bh_set_bruteforce(A: Iterable[int], h: int) -> bool:
    """True iff every integer has at most one representation as a sum of
    h elements of A."""
    return first_collision(A, h) is None


@dataclass(frozen=True)
class SumSupportTable:
    """supports[j] is D_j, the set of sums of j elements of ``elements``
    (with repetition), for j = 0..h."""

    h: int
    elements: tuple[int, ...]
    supports: tuple[SupportSet, ...]

    @property
    def ground_set_size(self) -> int:
        return len(self.elements)

    @property
    def contains_zero(self) -> bool:
        return self.elements[0] == 0

    @property
    def max_element(self) -> int:
        return self.elements[-1]

    @property
    def backend(self) -> str:
        return self.supports[0].kind

    @property
    def nbytes(self) -> int:
        return sum(s.nbytes for s in self.supports)

    def support(self, j: int) -> SupportSet:
        return self.supports[j]


def _extend(table: SumSupportTable, b: int, dense_limit_bits: int) -> SumSupportTable:
    """Supports of A + {b}, admissible or not.

    A size-j multiset from A + {b} either avoids b (a member of D_j) or uses
    it at least once (b plus a member of D'_{j-1}). Unrolled this is
    D'_j = union over m of (m*b + D_{j-m}).
    """
    h = table.h
    dense = use_dense(check_int64(h * b, "h-fold sum bound"), dense_limit_bits)
    old = [convert(s, dense=dense) for s in table.supports]
    new = [old[0]]
    for j in range(1, h + 1):
        new.append(old[j].union(new[j - 1].shifted(b)))
    return SumSupportTable(h=h, elements=table.elements + (b,), supports=tuple(new))


def _singleton_table(h: int, *, dense: bool) -> SumSupportTable:
    zero = make_support([0], dense=dense)
    return SumSupportTable(h=h, elements=(0,), supports=tuple(zero for _ in range(h + 1)))


def build_support_table(
    A: Iterable[int], h: int, dense_limit_bits: Optional[int] = None
) -> SumSupportTable:
    _check_order(h)
    elements = normalize_set(A)
    if elements[0] != 0:
        raise InvalidInputError("support tables require 0 in the ground set")
    _checked_range(elements, h)
    limit = settings.DENSE_LIMIT_BITS if dense_limit_bits is None else dense_limit_bits
    table = _singleton_table(h, dense=use_dense(0, limit))
    for b in elements[1:]:
        table = _extend(table, b, limit)
    logger.debug(
        "built %s table for h=%d over %d elements (%d bytes)",
        table.backend, h, len(elements), table.nbytes,
    )
    return table


def verify_by_cardinality(table: SumSupportTable) -> bool:
    """B_h test for 0-containing sets: all C(m+h-1, h) size-h multisets
    must have pairwise distinct sums, so |D_h| must reach that count."""
    if not table.contains_zero:
        raise InvalidInputError("the cardinality identity needs 0 in the ground set")
    expected = comb(table.ground_set_size + table.h - 1, table.h)
    return len(table.supports[table.h]) == expected


def admissible(table: SumSupportTable, b: int) -> bool:
    """True iff A + {b} is again a B_h-set, for a B_h-set A containing 0
    and b > max(A).

    Two different representations of one integer, after cancelling common
    terms, use b on one side only. Say d >= 1 copies of b plus a multiset S
    of at most h - d elements of A on one side, and a multiset T of at most h
    elements of A on the other. Padding S and T with zeros fixes their sizes, so
    the collision is d*b + sum(S) == sum(T) with sum(S) in D_{h-d} and
    sum(T) in D_h. Hence A + {b} is B_h exactly when (D_{h-d} + d*b) misses
    D_h for every d in 1..h.
    """
    if b <= table.max_element:
        raise InvalidInputError(f"candidate {b} must exceed max(A) = {table.max_element}")
    h = table.h
    check_int64(h * b, "h-fold sum bound")
    top = table.supports[h]
    for d in range(1, h + 1):
        if not top.isdisjoint_shifted(table.supports[h - d], d * b):
            return False
    return True


def insert_element(
    table: SumSupportTable, b: int, dense_limit_bits: Optional[int] = None
) -> SumSupportTable:
    if not admissible(table, b):
        raise InvalidInputError(f"{b} is not admissible for h={table.h}")
    limit = settings.DENSE_LIMIT_BITS if dense_limit_bits is None else dense_limit_bits
    return _extend(table, b, limit)
