from __future__ import annotations

import pytest

from yangso3.exact import BiSeries, TruncSeries, biseries_clear_and_compare, difference_polynomial, from_rows


def _op(rows: list[list[int]], valid: int = 3) -> TruncSeries:
    return TruncSeries.from_coefficients([from_rows([[1, 0], [0, 1]]), from_rows(rows)], 0, valid, 2)


def test_product_of_single_variable_series() -> None:
    a = BiSeries.from_u(_op([[0, 1], [0, 0]]))
    b = BiSeries.from_v(_op([[0, 0], [1, 0]]))
    ab = a * b
    assert ab.coefficient(1, 1)[0, 0] == 1
    assert ab.coefficient(1, 1)[1, 1] == 0
    assert ab.coefficient(1, 0)[0, 1] == 1


def test_noncommuting_order_is_kept() -> None:
    a = BiSeries.from_u(_op([[0, 1], [0, 0]]))
    b = BiSeries.from_v(_op([[0, 0], [1, 0]]))
    cmp = biseries_clear_and_compare(a * b, b * a)
    assert not cmp.passed
    assert (cmp.r, cmp.s) == (1, 1)


def test_validity_window() -> None:
    a = BiSeries.from_u(_op([[1, 0], [0, 1]], valid=2))
    with pytest.raises(ValueError, match="outside the validity window"):
        a.coefficient(3, 0)


def test_clearing_lowers_window() -> None:
    a = BiSeries.from_u(_op([[1, 0], [0, 1]]))
    cleared = a.mul_poly(difference_polynomial([0]))
    assert cleared.lo_u == -1
    assert cleared.coefficient(-1, 0)[0, 0] == 1


def test_positive_power_window() -> None:
    a = BiSeries.from_u(_op([[1, 0], [0, 1]]))
    with pytest.raises(ValueError, match="Positive-power window"):
        a.mul_poly(difference_polynomial([0, 1, 2]))


def test_divide_by_difference_inverts_clearing() -> None:
    # (u - v)·X expanded back by 1/(u - v) returns X on the known window
    a = BiSeries.from_u(_op([[1, 2], [3, 4]], valid=4)) * BiSeries.from_v(_op([[0, 1], [1, 0]], valid=4))
    back = a.mul_poly(difference_polynomial([0])).divide_by_difference(0, 6)
    cmp = biseries_clear_and_compare(back, a)
    assert cmp.passed
    assert cmp.checked > 0
