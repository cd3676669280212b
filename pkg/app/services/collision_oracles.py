"""Exhaustive checks of the a_4(h) formula against the first four greedy
terms {0, 1, h+1, h^2+h+1}.

A candidate c is blocked when some multiset containing c collides with a
multiset of the first four terms. With x_i copies of the i-th term on the
candidate side and y_i on the other, that is

    x0*c + x1 + x2*(h+1) + x3*(h^2+h+1) == y1 + y2*(h+1) + y3*(h^2+h+1)

with x0 >= 1, x0+x1+x2+x3 <= h, y1+y2+y3 <= h and x_i*y_i == 0 (common
terms cancelled). Below h^2+h+1 the equation can describe two equal
multisets, so collision claims are only made for c > h^2+h+1.
"""
import logging
from functools import lru_cache
from itertools import product
from typing import Optional

from app.errors import InternalError, InvalidInputError, check_int64
from app.schemas.witness import (
    ClaimCheck,
    CollisionWitness,
    IntegerInterval,
    IntervalFamily,
    LabeledInterval,
)
from app.services.closed_forms import a4_cofactor, closed_form_term, upper_bound_sum
from app.services.intervals import (
    component_containing,
    intervals_from_values,
    is_covered,
    merge_intervals,
    merge_spans,
)

logger = logging.getLogger(__name__)


def _check_order(h: int, minimum: int = 1) -> None:
    if h < minimum:
        raise InvalidInputError(f"h must be at least {minimum}, got {h}")


@lru_cache(maxsize=256)
def _bounded_triples(n: int) -> tuple[tuple[int, int, int], ...]:
    """All nonnegative (a, b, c) with a + b + c <= n, lexicographically."""
    return tuple(t for t in product(range(n + 1), repeat=3) if sum(t) <= n)


@lru_cache(maxsize=64)
def _rhs_lookup(h: int) -> dict[int, tuple[tuple[int, int, int], ...]]:
    s = h * h + h + 1
    lookup: dict[int, list[tuple[int, int, int]]] = {}
    for y in _bounded_triples(h):
        lookup.setdefault(y[0] + y[1] * (h + 1) + y[2] * s, []).append(y)
    return {value: tuple(ys) for value, ys in lookup.items()}


def collision_witness(h: int, c: int) -> Optional[CollisionWitness]:
    """First solution of the blocking equation for candidate c, or None.

    x0 runs upward, then (x1, x2, x3) lexicographically; right-hand sides
    come from a precomputed value -> (y1, y2, y3) table.
    """
    _check_order(h)
    if c < 1:
        raise InvalidInputError(f"candidate must be positive, got {c}")
    check_int64(h * c, "h * c")
    s = h * h + h + 1
    rhs = _rhs_lookup(h)
    top = h * s
    for x0 in range(1, h + 1):
        if x0 * c > top:
            break
        for x1, x2, x3 in _bounded_triples(h - x0):
            lhs = x0 * c + x1 + x2 * (h + 1) + x3 * s
            for y1, y2, y3 in rhs.get(lhs, ()):
                if x1 * y1 == 0 and x2 * y2 == 0 and x3 * y3 == 0:
                    return CollisionWitness(
                        h=h, c=c, x0=x0, x1=x1, x2=x2, x3=x3, y1=y1, y2=y2, y3=y3
                    )
    return None


def upper_bound_holds(h: int) -> bool:
    """No collision exists for c = (h+1)*H, so a_4(h) <= (h+1)*H."""
    _check_order(h)
    return collision_witness(h, (h + 1) * a4_cofactor(h)) is None


def min_unblocked(h: int) -> int:
    """Least c > h^2+h+1 without a collision witness, i.e. a_4(h)."""
    _check_order(h, minimum=2)
    cap = upper_bound_sum(h, 4)
    for c in range(h * h + h + 2, cap + 1):
        if collision_witness(h, c) is None:
            logger.debug("h=%d: least unblocked candidate %d", h, c)
            return c
    raise InternalError(f"cap exceeded: every candidate up to {cap} is blocked for h={h}")


def lower_bound_blocked_values(h: int) -> frozenset[int]:
    """All b in [1, 1+h+h^2+h^3] with

        b + x1 + x2*(h+1) == y1 + y2*(h+1) + y3*(h^2+h+1)

    for x1+x2 <= h-1, y1+y2+y3 <= h and x1*y1 == x2*y2 == 0.

    With p = y2 - x2 and q = y1 - x1 the disjointness conditions make
    (x1, x2, y1, y2) a function of (p, q), so the search runs over
    (y3, p, q) only.
    """
    _check_order(h, minimum=2)
    s = h * h + h + 1
    cap = upper_bound_sum(h, 4)
    values: set[int] = set()
    for y3 in range(h + 1):
        for p in range(-(h - 1), h - y3 + 1):
            x2, y2 = max(-p, 0), max(p, 0)
            for q in range(-(h - 1 - x2), h - y3 - y2 + 1):
                b = y3 * s + p * (h + 1) + q
                if 1 <= b <= cap:
                    values.add(b)
    return frozenset(values)


def lower_bound_witness_set(h: int) -> list[IntegerInterval]:
    return intervals_from_values(lower_bound_blocked_values(h))


def _half(numerator: int) -> int:
    if numerator % 2:
        raise InternalError(f"numerator {numerator} is odd, refusing to halve")
    return numerator // 2


def _interval(lo: int, hi: int) -> IntegerInterval:
    return IntegerInterval(lo=lo, hi=hi)


def _same_union(spans: list[tuple[int, int]], expected: IntegerInterval) -> bool:
    return merge_spans(spans) == [(expected.lo, expected.hi)]


def lower_bound_interval_family(h: int, check_witnesses: bool = True) -> IntervalFamily:
    """Blocked intervals for a_4(h), evaluated from their closed forms and
    cross-checked against the pieces they are built from.

    For each y3 in 1..h, the pieces with x2 = 0 (one per y2) merge into the
    y-side interval and the pieces with y2 = 0 (one per x2) into the x-side
    interval; together they form I(y3). Consecutive I(y3) meet exactly for
    y3 <= floor((h^2-1)/(2h+1)), which gives the low run starting at h+2. A
    single extra tail interval closes the gap up to a_4(h) - 1.
    """
    _check_order(h, minimum=2)
    s = h * h + h + 1
    a4 = closed_form_term(h, 4)
    threshold = (h * h - 1) // (2 * h + 1)
    labeled: list[LabeledInterval] = []
    checks: list[ClaimCheck] = []
    blocks: list[IntegerInterval] = []

    for y3 in range(1, h + 1):
        y_pieces = [
            (y3 * s + y2 * (h + 1) - h + 1, y3 * s + y2 * h + h - y3)
            for y2 in range(h - y3 + 1)
        ]
        y_side = _interval(y3 * s - h + 1, y3 * h * h + h * h + h)
        x_pieces = [
            (y3 * s - x2 * h - h + 1, y3 * s - x2 * (h + 1) + h - y3)
            for x2 in range(h - y3 + 1)
        ]
        x_side = _interval(y3 * (h + 1) ** 2 - h * h - h + 1, y3 * (h * h + h) + h)
        block = _interval(x_side.lo, y_side.hi)
        checks.append(ClaimCheck(
            name=f"y-side pieces merge to {y_side} for y3={y3}",
            holds=_same_union(y_pieces, y_side),
        ))
        checks.append(ClaimCheck(
            name=f"x-side pieces merge to {x_side} for y3={y3}",
            holds=_same_union(x_pieces, x_side),
        ))
        checks.append(ClaimCheck(
            name=f"x-side and y-side form I({y3}) = {block}",
            holds=merge_intervals([x_side, y_side]) == [block],
        ))
        labeled.append(LabeledInterval(label=f"y_side[y3={y3}]", interval=y_side))
        labeled.append(LabeledInterval(label=f"x_side[y3={y3}]", interval=x_side))
        labeled.append(LabeledInterval(label=f"I[y3={y3}]", interval=block))
        blocks.append(block)

    for y3 in range(1, h):
        meets = blocks[y3 - 1].touches(blocks[y3])
        predicted = y3 <= threshold
        checks.append(ClaimCheck(
            name=f"I({y3}) meets I({y3 + 1}) iff y3 <= {threshold}",
            holds=meets == predicted,
            detail=f"meets={meets}",
        ))
    checks.append(ClaimCheck(
        name="threshold is (h-1)/2 for odd h, (h-2)/2 for even h",
        holds=threshold == ((h - 1) // 2 if h % 2 else (h - 2) // 2),
        detail=f"threshold={threshold}",
    ))

    if h % 2:
        low_run = _interval(h + 2, _half(h**3 + 3 * h * h + 2 * h))
        tail_y3, tail_x2 = (h + 3) // 2, (h + 1) // 2
        tail = _interval(_half(h**3 + 3 * h * h + h + 5), _half(h**3 + 3 * h * h + 3 * h - 1))
    else:
        low_run = _interval(h + 2, _half(h**3 + 2 * h * h + 2 * h))
        tail_y3, tail_x2 = (h + 2) // 2, h // 2
        tail = _interval(_half(h**3 + 2 * h * h + h + 4), _half(h**3 + 2 * h * h + 3 * h))
    center = tail_y3 * s - tail_x2 * (h + 1)
    substituted = _interval(center - (h - 1 - tail_x2), center + h - tail_y3)

    checks.append(ClaimCheck(
        name=f"I(1)..I({threshold + 1}) merge to {low_run}",
        holds=merge_intervals(blocks[: threshold + 1]) == [low_run],
    ))
    checks.append(ClaimCheck(
        name=f"tail (y3={tail_y3}, x2={tail_x2}) equals {tail}",
        holds=substituted == tail,
        detail=f"substituted={substituted}",
    ))
    checks.append(ClaimCheck(name="tail meets the low run", holds=low_run.touches(tail)))
    labeled.append(LabeledInterval(label="low_run", interval=low_run))
    labeled.append(LabeledInterval(label="tail", interval=tail))

    merged = merge_intervals(item.interval for item in labeled)
    union = component_containing(merged, h + 2)
    if union is None:
        raise InternalError(f"h+2 = {h + 2} is not covered by the interval family")
    checks.append(ClaimCheck(
        name=f"union equals [h+2, a_4(h)-1] = [{h + 2}, {a4 - 1}]",
        holds=union == _interval(h + 2, a4 - 1),
        detail=f"union={union}",
    ))

    if check_witnesses:
        witness_set = lower_bound_witness_set(h)
        outside = [item.label for item in labeled if not is_covered(item.interval, witness_set)]
        checks.append(ClaimCheck(
            name="every listed interval lies in the witness set",
            holds=not outside,
            detail=", ".join(outside),
        ))
        checks.append(ClaimCheck(
            name=f"a_4(h) = {a4} is not in the witness set",
            holds=component_containing(witness_set, a4) is None,
        ))

    return IntervalFamily(
        h=h,
        threshold=threshold,
        intervals=labeled,
        merged=merged,
        union=union,
        checks=checks,
    )
