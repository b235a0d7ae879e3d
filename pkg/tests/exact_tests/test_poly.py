from __future__ import annotations

import gmpy2
import pytest

from yangso3.exact import RatFunc, degree, difference_polynomial, poly, poly_coeffs


def test_poly_coefficients_by_degree() -> None:
    p = poly([1, 0, "1/2"])
    assert degree(p) == 2
    assert poly_coeffs(p) == [1, 0, gmpy2.mpq(1, 2)]


def test_ratfunc_reduces_and_normalizes() -> None:
    # (2u - 2)/(2u^2 - 2) = 1/(u + 1)
    f = RatFunc.from_coeffs([-2, 2], [-2, 0, 2])
    assert f == RatFunc.inverse_linear(-1)
    assert poly_coeffs(f.den) == [1, 1]


def test_ratfunc_arithmetic() -> None:
    f = RatFunc.inverse_linear(0)
    g = RatFunc.inverse_linear(1)
    # 1/u - 1/(u - 1) = -1/(u(u - 1))
    assert (f - g).evaluate(2) == gmpy2.mpq(-1, 2)
    assert (f * g).evaluate(3) == gmpy2.mpq(1, 6)
    assert (f * 4).evaluate(2) == 2


def test_ratfunc_shift_and_reflect() -> None:
    f = RatFunc.inverse_linear("1/2")
    assert f.shift(1).evaluate(0) == 2
    assert f.reflect().evaluate(1) == gmpy2.mpq(-2, 3)


def test_ratfunc_pole() -> None:
    with pytest.raises(ZeroDivisionError):
        RatFunc.inverse_linear(1).evaluate(1)


def test_ratfunc_zero_denominator() -> None:
    with pytest.raises(ValueError, match="nonzero"):
        RatFunc.from_coeffs([1], [0])


def test_difference_polynomial() -> None:
    # (u - v)(u - v - 1/2) = u^2 - 2uv + v^2 - u/2 + v/2
    terms = difference_polynomial([0, "1/2"])
    assert terms[(2, 0)] == 1
    assert terms[(1, 1)] == -2
    assert terms[(0, 2)] == 1
    assert terms[(1, 0)] == gmpy2.mpq(-1, 2)
    assert terms[(0, 1)] == gmpy2.mpq(1, 2)
    assert terms.get((0, 0), 0) == 0
