import pytest
from pydantic import ValidationError

from app.schemas.witness import IntegerInterval
from app.services.intervals import (
    component_containing,
    intervals_from_values,
    is_covered,
    merge_intervals,
    merge_spans,
)


def iv(lo, hi):
    return IntegerInterval(lo=lo, hi=hi)


def test_merge_joins_overlapping_and_adjacent():
    assert merge_spans([(5, 8), (1, 3), (4, 4), (10, 12), (11, 11)]) == [(1, 8), (10, 12)]
    assert merge_intervals([iv(21, 30), iv(5, 21), iv(31, 31)]) == [iv(5, 31)]


def test_merge_keeps_gaps():
    assert merge_intervals([iv(4, 10), iv(11, 11), iv(13, 14)]) == [iv(4, 11), iv(13, 14)]


def test_intervals_from_values():
    assert intervals_from_values([3, 1, 2, 7, 9, 8, 12]) == [iv(1, 3), iv(7, 9), iv(12, 12)]
    assert intervals_from_values([]) == []


def test_membership_and_relations():
    a = iv(5, 21)
    assert 5 in a and 21 in a and 22 not in a
    assert a.size == 17
    assert iv(6, 7).issubset(a)
    assert a.touches(iv(22, 30))
    assert not a.touches(iv(23, 30))
    assert str(a) == "[5, 21]"


def test_component_lookup_and_coverage():
    merged = [iv(4, 11), iv(13, 14)]
    assert component_containing(merged, 9) == iv(4, 11)
    assert component_containing(merged, 12) is None
    assert is_covered(iv(5, 11), merged)
    assert not is_covered(iv(10, 13), merged)


def test_empty_interval_rejected():
    with pytest.raises(ValidationError):
        IntegerInterval(lo=3, hi=2)
