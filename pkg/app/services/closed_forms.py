"""Exact formulas for the first terms of the greedy B_h-set.

a_0 = 0, a_1 = 1, a_2 = h + 1, a_3 = h^2 + h + 1 and a_4 is a
quasi-polynomial in h with one branch per parity. No closed form is known
for k >= 5.
"""
from app.errors import ClosedFormRangeError, InternalError, InvalidInputError, check_int64
from app.schemas.theorem import QuasiPolynomialValue

MAX_CLOSED_FORM_INDEX = 4


def _check_order(h: int) -> None:
    if h < 1:
        raise InvalidInputError(f"h must be a positive integer, got {h}")


def _half(numerator: int) -> int:
    if numerator % 2:
        raise InternalError(f"numerator {numerator} is odd, refusing to halve")
    return numerator // 2


def a4_numerator(h: int) -> int:
    """Twice a_4(h)."""
    _check_order(h)
    if h % 2:
        return h**3 + 3 * h**2 + 3 * h + 1
    return h**3 + 2 * h**2 + 3 * h + 2


def a4_value(h: int) -> QuasiPolynomialValue:
    value = check_int64(_half(a4_numerator(h)), "a_4(h)")
    return QuasiPolynomialValue(h=h, value=value, parity_branch="odd" if h % 2 else "even")


def closed_form_term(h: int, k: int) -> int:
    _check_order(h)
    if k < 0:
        raise InvalidInputError(f"k must be nonnegative, got {k}")
    if k > MAX_CLOSED_FORM_INDEX:
        raise ClosedFormRangeError(f"no closed form is known for a_{k}(h)")
    if k == 4:
        return a4_value(h).value
    return check_int64((0, 1, h + 1, h * h + h + 1)[k], f"a_{k}(h)")


def a4_floor_form(h: int) -> int:
    """floor((h+3)/2) * h^2 + floor(3h/2) + 1."""
    _check_order(h)
    return check_int64((h + 3) // 2 * h * h + (3 * h) // 2 + 1, "a_4(h)")


def a4_cofactor(h: int) -> int:
    """The integer H with a_4(h) == (h + 1) * H."""
    _check_order(h)
    if h % 2:
        return check_int64(_half(h * h + 2 * h + 1), "H")
    return check_int64(_half(h * h + h + 2), "H")


def upper_bound_sum(h: int, k: int) -> int:
    """sum_{i<k} h^i, the general bound a_k(h) <= 1 + h + ... + h^(k-1)."""
    _check_order(h)
    if k < 1:
        raise InvalidInputError(f"k must be a positive integer, got {k}")
    total = check_int64(sum(h**i for i in range(k)), "bound")
    if h >= 2 and k >= 2 and not total < h ** (k - 1) + 2 * h ** (k - 2):
        raise InternalError(f"bound {total} is not below h^(k-1) + 2h^(k-2)")
    return total
