import pytest

from app.errors import InvalidInputError
from app.schemas.witness import IntegerInterval
from app.services.bh_core import admissible, build_support_table
from app.services.closed_forms import closed_form_term
from app.services.collision_oracles import (
    collision_witness,
    lower_bound_blocked_values,
    lower_bound_interval_family,
    lower_bound_witness_set,
    min_unblocked,
    upper_bound_holds,
)
from app.services.greedy_engine import greedy_sequence


def _interval_of(family, label):
    return next(item.interval for item in family.intervals if item.label == label)


def test_witness_for_blocked_candidates():
    w = collision_witness(2, 8)
    assert (w.x, w.y) == ((1, 0, 0, 0), (1, 0, 1))
    w = collision_witness(2, 11)
    assert (w.x, w.y) == ((1, 0, 1, 0), (0, 0, 2))
    assert w.lhs == w.rhs == 14


@pytest.mark.parametrize("h, c", [(2, 12), (3, 32), (4, 55), (5, 108)])
def test_no_witness_at_fourth_term(h, c):
    assert collision_witness(h, c) is None


def test_witness_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        collision_witness(0, 5)
    with pytest.raises(InvalidInputError):
        collision_witness(2, 0)
    with pytest.raises(OverflowError):
        collision_witness(2, 2**62)


@pytest.mark.parametrize("h", range(1, 17))
def test_upper_bound_holds(h):
    assert upper_bound_holds(h)


@pytest.mark.parametrize("h", range(2, 17))
def test_gap_candidates_all_have_witnesses(h):
    s = h * h + h + 1
    a4 = closed_form_term(h, 4)
    gap = list(range(s + 1, a4))
    step = max(1, len(gap) // 5)
    sampled = gap[::step]
    assert len(sampled) >= min(5, len(gap))
    for c in sampled:
        witness = collision_witness(h, c)
        assert witness is not None and witness.c == c


@pytest.mark.parametrize("h, expected", [(2, 12), (4, 55), (5, 108)])
def test_min_unblocked(h, expected):
    assert min_unblocked(h) == expected


def test_min_unblocked_needs_h_at_least_two():
    with pytest.raises(InvalidInputError):
        min_unblocked(1)


def test_three_routes_agree():
    for h in range(2, 17):
        assert min_unblocked(h) == closed_form_term(h, 4) == greedy_sequence(h, 4).terms[4]


def test_witness_set_examples():
    values = lower_bound_blocked_values(2)
    assert sorted(v for v in values if 7 < v < 12) == [8, 9, 10, 11]
    assert 12 not in values
    assert set(range(4, 12)) <= values
    assert set(range(5, 32)) <= lower_bound_blocked_values(3)
    assert any(IntegerInterval(lo=4, hi=11).issubset(iv) for iv in lower_bound_witness_set(2))


@pytest.mark.parametrize("h", range(2, 9))
def test_witnesses_are_genuine_collisions(h):
    s = h * h + h + 1
    table = build_support_table([0, 1, h + 1, s], h)
    for b in lower_bound_blocked_values(h):
        if b > s:
            assert not admissible(table, b), b


@pytest.mark.parametrize("h", range(2, 13))
def test_witness_set_covers_gap(h):
    s = h * h + h + 1
    assert set(range(s + 1, closed_form_term(h, 4))) <= lower_bound_blocked_values(h)


def test_interval_family_for_h3():
    family = lower_bound_interval_family(3)
    assert _interval_of(family, "I[y3=1]") == IntegerInterval(lo=5, hi=21)
    assert _interval_of(family, "I[y3=2]") == IntegerInterval(lo=21, hi=30)
    assert _interval_of(family, "tail") == IntegerInterval(lo=31, hi=31)
    assert family.union == IntegerInterval(lo=5, hi=31)
    assert family.threshold == 1
    assert family.all_hold


def test_interval_family_for_h2():
    family = lower_bound_interval_family(2)
    assert family.union == IntegerInterval(lo=4, hi=11)
    assert family.union.hi == (2**3 + 2 * 2**2 + 3 * 2) // 2
    assert family.threshold == 0
    assert family.all_hold


def test_interval_family_algebra_up_to_fifty():
    for h in range(2, 51):
        family = lower_bound_interval_family(h, check_witnesses=False)
        assert family.union == IntegerInterval(lo=h + 2, hi=closed_form_term(h, 4) - 1)
        assert family.threshold == ((h - 1) // 2 if h % 2 else (h - 2) // 2)
        assert family.all_hold, [c.name for c in family.checks if not c.holds]


@pytest.mark.parametrize("h", range(2, 13))
def test_interval_family_lies_in_witness_set(h):
    family = lower_bound_interval_family(h)
    assert family.all_hold, [c.name for c in family.checks if not c.holds]


def test_interval_family_needs_h_at_least_two():
    with pytest.raises(InvalidInputError):
        lower_bound_interval_family(1)
