from __future__ import annotations

import sys
from fractions import Fraction
from typing import Union

import gmpy2

if sys.version_info >= (3, 10):
    from typing import TypeAlias
else:
    from typing_extensions import TypeAlias

# Canonical exact scalar. `mpq` keeps numerator/denominator reduced with a
# positive denominator after every operation.
Rational: TypeAlias = gmpy2.mpq
RationalLike: TypeAlias = Union[int, Fraction, str, gmpy2.mpq]

ZERO = gmpy2.mpq(0)
ONE = gmpy2.mpq(1)
HALF = gmpy2.mpq(1, 2)


def rational(value: RationalLike) -> Rational:
    """
    Convert a value to an exact rational.

    Args:
        value (int | Fraction | str | mpq):
            The value. Strings are parsed as "p", "p/q" or "-p/q".

    Returns:
        mpq: The reduced rational.

    Raises:
        ValueError: If the value is a float or a malformed string.
    """
    if isinstance(value, float):
        raise ValueError(f"Floating-point input is not exact: {value!r}")
    if isinstance(value, Fraction):
        return gmpy2.mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    return gmpy2.mpq(value)


def parse_rational(text: str) -> Rational:
    """
    Parse "0", "3", "1/3" or "-2/5" into an exact rational.

    Raises:
        ValueError: If the text is not an integer or an integer fraction.
    """
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"Malformed rational: {text!r}") from None
    if q == 0:
        raise ValueError(f"Zero denominator in rational: {text!r}")
    return gmpy2.mpq(p, q)


def format_rational(value: Rational | int) -> str:
    """Serialize as "p/q", or "p" for integers."""
    q = gmpy2.mpq(value)
    if q.denominator == 1:
        return str(int(q.numerator))
    return f"{int(q.numerator)}/{int(q.denominator)}"


def binomial(n: int, j: int) -> int:
    """Generalized binomial coefficient C(n, j) for integer n and j >= 0."""
    if j < 0:
        return 0
    if n >= 0:
        return int(gmpy2.comb(n, j))
    return (-1) ** j * int(gmpy2.comb(-n + j - 1, j))
