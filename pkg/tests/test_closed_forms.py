import pytest
from pydantic import ValidationError

from app.errors import ClosedFormRangeError, InvalidInputError
from app.schemas.theorem import QuasiPolynomialValue
from app.services.closed_forms import (
    a4_cofactor,
    a4_floor_form,
    a4_value,
    closed_form_term,
    upper_bound_sum,
)


@pytest.mark.parametrize(
    "h, k, expected",
    [
        (7, 0, 0),
        (7, 1, 1),
        (7, 2, 8),
        (7, 3, 57),
        (1, 4, 4),
        (2, 4, 12),
        (3, 4, 32),
        (4, 4, 55),
        (5, 4, 108),
    ],
)
def test_closed_form_term(h, k, expected):
    assert closed_form_term(h, k) == expected


def test_no_closed_form_beyond_fourth_term():
    with pytest.raises(ClosedFormRangeError):
        closed_form_term(3, 5)
    with pytest.raises(InvalidInputError):
        closed_form_term(0, 2)


@pytest.mark.parametrize("h, expected", [(2, 12), (3, 32), (5, 108)])
def test_floor_form(h, expected):
    assert a4_floor_form(h) == expected


@pytest.mark.parametrize("h, expected", [(1, 2), (2, 4), (3, 8)])
def test_cofactor(h, expected):
    assert a4_cofactor(h) == expected


@pytest.mark.parametrize("h, k, expected", [(2, 4, 15), (1, 6, 6), (3, 4, 40)])
def test_upper_bound_sum(h, k, expected):
    assert upper_bound_sum(h, k) == expected


def test_identities_up_to_a_thousand():
    for h in range(1, 1001):
        a4 = closed_form_term(h, 4)
        assert a4 == a4_floor_form(h)
        assert (h + 1) * a4_cofactor(h) == a4
        for k in range(1, 5):
            assert closed_form_term(h, k) <= upper_bound_sum(h, k)


def test_strict_growth():
    for h in range(1, 1000):
        for k in (2, 3, 4):
            assert closed_form_term(h + 1, k) > closed_form_term(h, k)


def test_quasi_polynomial_branch():
    assert a4_value(3) == QuasiPolynomialValue(h=3, value=32, parity_branch="odd")
    assert a4_value(4).parity_branch == "even"
    with pytest.raises(ValidationError):
        QuasiPolynomialValue(h=4, value=55, parity_branch="odd")
