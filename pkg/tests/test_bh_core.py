import random
from math import comb

import pytest

from app.errors import InvalidInputError
from app.services.bh_core import (
    SumSupportTable,
    admissible,
    build_support_table,
    count_representations,
    first_collision,
    insert_element,
    is_bh_set_bruteforce,
    normalize_set,
    representation_counts,
    verify_by_cardinality,
)
from app.services.support_sets import DenseSupport


@pytest.mark.parametrize(
    "A, h, n, expected",
    [
        ([0, 1], 2, 1, 1),
        ([0, 1, 2], 2, 2, 2),
        ([0, 1, 3, 7], 2, 10, 1),
        ([0, 1, 3, 7], 2, 5, 0),
    ],
)
def test_count_representations(A, h, n, expected):
    assert count_representations(A, h, n) == expected


@pytest.mark.parametrize(
    "A, h, expected",
    [
        ([0, 1, 2], 2, False),
        ([0], 5, True),
        ([0, 1, 3, 7, 12], 2, True),
        ([0, 1, 4, 13, 32], 3, True),
        ([0, 1, 4, 13, 31], 3, False),
    ],
)
def test_is_bh_set_bruteforce(A, h, expected):
    assert is_bh_set_bruteforce(A, h) is expected


def test_first_collision_reports_both_sides():
    assert first_collision([0, 1, 2], 2) == ((0, 2), (1, 1))
    assert first_collision([0, 1, 3, 7], 2) is None


@pytest.mark.parametrize("A", [[0, 1, 2], [0, 1, 3, 7], [2, 5, 6, 9, 10]])
@pytest.mark.parametrize("h", [1, 2, 3, 4])
def test_mass_conservation(A, h):
    assert sum(representation_counts(A, h).values()) == comb(len(A) + h - 1, h)


def test_normalization():
    assert normalize_set([7, 0, 3, 1]) == (0, 1, 3, 7)
    with pytest.raises(InvalidInputError):
        normalize_set([0, 1, 1])
    with pytest.raises(InvalidInputError):
        normalize_set([])
    with pytest.raises(InvalidInputError):
        normalize_set([-2, 0])


def test_order_must_be_positive():
    with pytest.raises(InvalidInputError):
        is_bh_set_bruteforce([0, 1], 0)
    with pytest.raises(InvalidInputError):
        build_support_table([0, 1], 0)


def test_overflow_checked():
    with pytest.raises(OverflowError):
        count_representations([0, 2**62], 4, 0)
    with pytest.raises(OverflowError):
        build_support_table([0, 2**62], 2)


@pytest.mark.parametrize(
    "A, h, expected_top",
    [
        ([0, 1], 2, [0, 1, 2]),
        ([0, 1, 3], 2, [0, 1, 2, 3, 4, 6]),
        ([0, 1, 4], 3, [0, 1, 2, 3, 4, 5, 6, 8, 9, 12]),
        ([0, 1, 3, 7], 2, [0, 1, 2, 3, 4, 6, 7, 8, 10, 14]),
    ],
)
def test_build_support_table(A, h, expected_top):
    table = build_support_table(A, h)
    assert list(table.support(0)) == [0]
    assert list(table.support(1)) == A
    assert list(table.support(h)) == expected_top


def test_build_requires_zero():
    with pytest.raises(InvalidInputError):
        build_support_table([1, 2, 5], 2)


@pytest.mark.parametrize(
    "A, h, expected",
    [
        ([0, 1, 3, 7], 2, True),
        ([0, 1, 2], 2, False),
        ([0], 3, True),
    ],
)
def test_verify_by_cardinality(A, h, expected):
    assert verify_by_cardinality(build_support_table(A, h)) is expected


def test_verify_by_cardinality_requires_zero():
    table = SumSupportTable(
        h=1,
        elements=(1, 2),
        supports=(DenseSupport(1), DenseSupport.from_values([1, 2])),
    )
    with pytest.raises(InvalidInputError):
        verify_by_cardinality(table)


@pytest.mark.parametrize(
    "A, h, b, expected",
    [
        ([0, 1, 3], 2, 4, False),
        ([0, 1, 3], 2, 7, True),
        ([0, 1, 4], 3, 9, False),
        ([0, 1, 4], 3, 13, True),
    ],
)
def test_admissible(A, h, b, expected):
    assert admissible(build_support_table(A, h), b) is expected


def test_admissible_rejects_small_candidate():
    with pytest.raises(InvalidInputError):
        admissible(build_support_table([0, 1, 3], 2), 3)


def test_insert_element_matches_build():
    table = insert_element(build_support_table([0, 1], 2), 3)
    assert list(table.support(2)) == [0, 1, 2, 3, 4, 6]
    assert len(insert_element(build_support_table([0, 1, 3], 2), 7).support(2)) == 10
    assert list(insert_element(build_support_table([0], 2), 1).support(2)) == [0, 1, 2]


def test_insert_element_rejects_inadmissible():
    with pytest.raises(InvalidInputError):
        insert_element(build_support_table([0, 1, 3], 2), 4)


def test_sparse_backend_agrees_with_dense():
    A, h = [0, 1, 5, 21, 55], 4
    dense = build_support_table(A, h)
    sparse = build_support_table(A, h, dense_limit_bits=0)
    assert dense.backend == "dense" and sparse.backend == "sparse"
    assert all(d == s for d, s in zip(dense.supports, sparse.supports))
    for b in range(56, 200):
        assert admissible(dense, b) == admissible(sparse, b)


def test_backend_switches_on_insert():
    table = build_support_table([0, 1, 3], 2, dense_limit_bits=10)
    assert table.backend == "dense"
    grown = insert_element(table, 7, dense_limit_bits=10)
    assert grown.backend == "sparse"
    assert list(grown.support(2)) == [0, 1, 2, 3, 4, 6, 7, 8, 10, 14]


def _random_bh_set(rng: random.Random, h: int, size: int) -> list[int]:
    A = [0]
    for _ in range(size - 1):
        for _ in range(30):
            c = rng.randint(1, 60)
            if c not in A and is_bh_set_bruteforce(A + [c], h):
                A = sorted(A + [c])
                break
    return A


def test_admissible_agrees_with_brute_force_on_random_sets():
    rng = random.Random(4242)
    checked = 0
    for _ in range(200):
        h = rng.randint(1, 4)
        A = _random_bh_set(rng, h, rng.randint(1, 5))
        table = build_support_table(A, h)
        for b in range(A[-1] + 1, 81):
            assert admissible(table, b) == is_bh_set_bruteforce(A + [b], h), (A, h, b)
            checked += 1
    assert checked >= 200


def test_cardinality_agrees_with_brute_force_on_random_sets():
    rng = random.Random(777)
    for _ in range(300):
        h = rng.randint(1, 4)
        A = sorted({0} | {rng.randint(1, 60) for _ in range(rng.randint(0, 4))})
        assert verify_by_cardinality(build_support_table(A, h)) == is_bh_set_bruteforce(A, h), (A, h)


def test_supports_are_monotone_and_extend_consistently():
    rng = random.Random(99)
    for _ in range(100):
        h = rng.randint(1, 4)
        A = sorted({0} | {rng.randint(1, 60) for _ in range(rng.randint(0, 4))})
        table = build_support_table(A, h)
        for j in range(h):
            assert table.support(j).issubset(table.support(j + 1))
        b = A[-1] + rng.randint(1, 20)
        if is_bh_set_bruteforce(A, h) and admissible(table, b):
            grown = insert_element(table, b)
            rebuilt = build_support_table(A + [b], h)
            assert all(g == r for g, r in zip(grown.supports, rebuilt.supports))


def test_singleton_table_respects_backend_limit():
    assert build_support_table([0], 3).backend == "dense"
    sparse = build_support_table([0], 3, dense_limit_bits=0)
    assert sparse.backend == "sparse"
    assert [list(s.to_array()) for s in sparse.supports] == [[0]] * 4
    assert verify_by_cardinality(sparse)
