"""Unions of closed integer intervals.

Merging works on half-open spans [lo, hi + 1) so that intervals which merely
abut, like [1, 3] and [4, 6], join into one.
"""
from typing import Iterable, Optional

from app.schemas.witness import IntegerInterval


def merge_spans(spans: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Merge closed (lo, hi) pairs into sorted, disjoint, non-adjacent pairs."""
    merged: list[list[int]] = []
    for start, end in sorted((lo, hi + 1) for lo, hi in spans):
        if merged and start <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], end)
        else:
            merged.append([start, end])
    return [(start, end - 1) for start, end in merged]


def merge_intervals(intervals: Iterable[IntegerInterval]) -> list[IntegerInterval]:
    spans = merge_spans((iv.lo, iv.hi) for iv in intervals)
    return [IntegerInterval(lo=lo, hi=hi) for lo, hi in spans]


def intervals_from_values(values: Iterable[int]) -> list[IntegerInterval]:
    """Runs of consecutive integers in ``values`` as intervals."""
    return [IntegerInterval(lo=lo, hi=hi) for lo, hi in merge_spans((v, v) for v in set(values))]


def component_containing(
    merged: list[IntegerInterval], n: int
) -> Optional[IntegerInterval]:
    for interval in merged:
        if n in interval:
            return interval
    return None


def is_covered(interval: IntegerInterval, merged: list[IntegerInterval]) -> bool:
    """Subset test against the union of already merged intervals."""
    return any(interval.issubset(component) for component in merged)
