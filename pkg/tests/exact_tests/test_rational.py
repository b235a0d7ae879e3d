from __future__ import annotations

from fractions import Fraction

import gmpy2
import pytest

from yangso3.exact import binomial, format_rational, parse_rational, rational


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0", gmpy2.mpq(0)),
        ("1/3", gmpy2.mpq(1, 3)),
        ("-2/5", gmpy2.mpq(-2, 5)),
        (" 4/6 ", gmpy2.mpq(2, 3)),
        ("+1", gmpy2.mpq(1)),
    ],
)
def test_parse_rational(text: str, expected: gmpy2.mpq) -> None:
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["abc", "1/0", "1.5", "", "1/2/3"])
def test_parse_rational_malformed(text: str) -> None:
    with pytest.raises(ValueError):
        parse_rational(text)


def test_rational_rejects_float() -> None:
    with pytest.raises(ValueError, match="not exact"):
        rational(0.5)  # type: ignore[arg-type]


def test_rational_accepts_fraction() -> None:
    assert rational(Fraction(3, 9)) == gmpy2.mpq(1, 3)


@pytest.mark.parametrize(
    "value, text",
    [(gmpy2.mpq(2, 4), "1/2"), (3, "3"), (gmpy2.mpq(-7, 3), "-7/3"), (gmpy2.mpq(0), "0")],
)
def test_format_rational(value: gmpy2.mpq, text: str) -> None:
    assert format_rational(value) == text


@pytest.mark.parametrize(
    "n, j, expected",
    [(5, 2, 10), (-1, 3, -1), (-2, 2, 3), (-3, 1, -3), (4, 0, 1), (2, -1, 0)],
)
def test_binomial(n: int, j: int, expected: int) -> None:
    assert binomial(n, j) == expected
