from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from yangso3.exact._matrix import identity, is_zero, zeros
from yangso3.exact._poly import RatFunc, degree, poly_coeffs
from yangso3.exact._rational import ONE, ZERO, Rational, RationalLike, binomial, rational

# Largest positive power of u a series may carry (the degree of the largest
# cleared denominator).
POSITIVE_POWER_WINDOW = 2

Coefficient = Any  # Rational for scalar series, OpMatrix for operator series


def _zero_like(dim: int | None) -> Coefficient:
    return ZERO if dim is None else zeros(dim)


def _one_like(dim: int | None) -> Coefficient:
    return ONE if dim is None else identity(dim)


def _is_zero_coeff(x: Coefficient) -> bool:
    return is_zero(x) if isinstance(x, np.ndarray) else x == 0


def _times(x: Coefficient, y: Coefficient) -> Coefficient:
    if isinstance(x, np.ndarray) and isinstance(y, np.ndarray):
        return x @ y
    if isinstance(x, np.ndarray):
        return x * y
    if isinstance(y, np.ndarray):
        return y * x
    return x * y


@dataclass(frozen=True, eq=False)
class TruncSeries:
    """
    Truncated series sum_r a_r u^{-r} for lo <= r <= valid.

    Coefficients below `lo` are exactly zero; coefficients above `valid` are
    unknown and never read.

    Args:
        coeffs (np.ndarray):
            Object array of shape (n,) for scalar series or (n, D, D) for
            operator series, with n = valid - lo + 1.
        lo (int):
            Exponent of the first stored coefficient; negative values are
            positive powers of u, bounded by `POSITIVE_POWER_WINDOW`.
        valid (int):
            Largest exponent whose coefficient is trustworthy.

    Raises:
        ValueError: If the shape does not match the window or lo is out of range.
    """

    coeffs: np.ndarray
    lo: int
    valid: int

    def __post_init__(self) -> None:
        if self.lo < -POSITIVE_POWER_WINDOW:
            raise ValueError(
                f"Positive-power window exceeded: lo={self.lo} < {-POSITIVE_POWER_WINDOW}"
            )
        if self.coeffs.ndim not in (1, 3):
            raise ValueError(f"Series coefficients must be scalars or square matrices, got shape {self.coeffs.shape}")
        n = max(self.valid - self.lo + 1, 0)
        if self.coeffs.shape[0] != n:
            raise ValueError(
                f"Expected {n} coefficients for window [{self.lo}, {self.valid}], got {self.coeffs.shape[0]}"
            )
        self.coeffs.setflags(write=False)

    @classmethod
    def from_coefficients(
        cls,
        coeffs: Sequence[Coefficient],
        lo: int = 0,
        valid: int | None = None,
        dim: int | None = None,
    ) -> TruncSeries:
        """
        Build a series from coefficients listed from exponent `lo` upward.

        Missing coefficients up to `valid` are zero.
        """
        valid = lo + len(coeffs) - 1 if valid is None else valid
        if dim is None and coeffs and isinstance(coeffs[0], np.ndarray):
            dim = coeffs[0].shape[0]
        n = valid - lo + 1
        shape: tuple[int, ...] = (n,) if dim is None else (n, dim, dim)
        arr = np.empty(shape, dtype=object)
        for i in range(n):
            c = coeffs[i] if i < len(coeffs) else _zero_like(dim)
            arr[i] = c if isinstance(c, np.ndarray) else rational(c)
        return cls(arr, lo, valid)

    @classmethod
    def constant(cls, c: Coefficient, valid: int) -> TruncSeries:
        dim = c.shape[0] if isinstance(c, np.ndarray) else None
        return cls.from_coefficients([c], 0, valid, dim)

    @classmethod
    def one(cls, valid: int, dim: int | None = None) -> TruncSeries:
        return cls.constant(_one_like(dim), valid)

    @classmethod
    def zero(cls, valid: int, dim: int | None = None) -> TruncSeries:
        return cls.constant(_zero_like(dim), valid)

    @property
    def dim(self) -> int | None:
        """Operator dimension D, or None for a scalar series."""
        return None if self.coeffs.ndim == 1 else int(self.coeffs.shape[1])

    def coefficient(self, r: int) -> Coefficient:
        """
        Coefficient of u^{-r}.

        Raises:
            ValueError: If r lies beyond the validity order.
        """
        if r > self.valid:
            raise ValueError(f"Coefficient u^-{r} requested beyond validity order {self.valid}")
        if r < self.lo:
            return _zero_like(self.dim)
        return self.coeffs[r - self.lo]

    def items(self) -> list[tuple[int, Coefficient]]:
        return [(self.lo + i, c) for i, c in enumerate(self.coeffs)]

    def truncate(self, valid: int) -> TruncSeries:
        if valid >= self.valid:
            return self
        return TruncSeries(self.coeffs[: max(valid - self.lo + 1, 0)].copy(), self.lo, valid)

    def as_operator(self, dim: int) -> TruncSeries:
        """Promote a scalar series to c_r times the identity operator."""
        if self.dim is not None:
            if self.dim != dim:
                raise ValueError(f"Dimension mismatch: {self.dim} vs {dim}")
            return self
        return TruncSeries.from_coefficients([identity(dim) * c for c in self.coeffs], self.lo, self.valid, dim)

    def with_perturbed(self, r: int, delta: RationalLike, entry: tuple[int, int] = (0, 0)) -> TruncSeries:
        """Copy with `delta` added to one entry of the u^{-r} coefficient."""
        if not self.lo <= r <= self.valid:
            raise ValueError(f"Exponent {r} outside the stored window [{self.lo}, {self.valid}]")
        arr = self.coeffs.copy()
        if self.dim is None:
            arr[r - self.lo] = arr[r - self.lo] + rational(delta)
        else:
            m = arr[r - self.lo].copy()
            m[entry] = m[entry] + rational(delta)
            arr[r - self.lo] = m
        return TruncSeries(arr, self.lo, self.valid)

    def _check_compatible(self, other: TruncSeries) -> None:
        if self.dim is not None and other.dim is not None and self.dim != other.dim:
            raise ValueError(f"Dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check_compatible(other)
        lo = min(self.lo, other.lo)
        valid = min(self.valid, other.valid)
        dim = self.dim if self.dim is not None else other.dim
        a = self if dim is None else self.as_operator(dim)
        b = other if dim is None else other.as_operator(dim)
        return TruncSeries.from_coefficients(
            [a.coefficient(r) + b.coefficient(r) for r in range(lo, valid + 1)], lo, valid, dim
        )

    def __neg__(self) -> TruncSeries:
        return self.scale(-1)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def scale(self, c: RationalLike) -> TruncSeries:
        q = rational(c)
        return TruncSeries.from_coefficients([x * q for x in self.coeffs], self.lo, self.valid, self.dim)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        return series_mul(self, other)

    def mul_poly(self, coeffs: Sequence[RationalLike]) -> TruncSeries:
        """
        Multiply by the polynomial sum_d p_d u^d.

        Each degree lowers both `lo` and `valid` by one.
        """
        p = [rational(c) for c in coeffs]
        deg = len(p) - 1
        lo, valid = self.lo - deg, self.valid - deg
        out = []
        for m in range(lo, valid + 1):
            acc = _zero_like(self.dim)
            for d, pd in enumerate(p):
                if pd != 0 and m + d >= self.lo:
                    acc = acc + self.coefficient(m + d) * pd
            out.append(acc)
        return TruncSeries.from_coefficients(out, lo, valid, self.dim)

    def equals(self, other: TruncSeries) -> bool:
        return series_first_difference(self, other) is None

    def __repr__(self) -> str:
        kind = "scalar" if self.dim is None else f"dim={self.dim}"
        return f"TruncSeries({kind}, lo={self.lo}, valid={self.valid})"


def _cauchy(
    a: TruncSeries, b: TruncSeries, combine: Callable[[Coefficient, Coefficient], Coefficient], dim: int | None
) -> TruncSeries:
    lo = a.lo + b.lo
    valid = min(a.valid + b.lo, b.valid + a.lo)
    n = valid - lo + 1
    out: list[Coefficient] = [_zero_like(dim) for _ in range(max(n, 0))]
    for i, x in enumerate(a.coeffs):
        if i >= n:
            break
        if _is_zero_coeff(x):
            continue
        for j in range(min(len(b.coeffs), n - i)):
            out[i + j] = out[i + j] + combine(x, b.coeffs[j])
    return TruncSeries.from_coefficients(out, lo, valid, dim)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """
    Cauchy product a(u)·b(u), keeping the operand order.

    Scalar series act on operator series by scalar multiplication.

    Args:
        a (TruncSeries): Left factor.
        b (TruncSeries): Right factor.

    Returns:
        TruncSeries: The product, valid through
        min(a.valid + b.lo, b.valid + a.lo).

    Raises:
        ValueError: If the operator dimensions differ.
    """
    a._check_compatible(b)
    dim = a.dim if a.dim is not None else b.dim
    return _cauchy(a, b, _times, dim)


def series_tensor(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Product a(u)⊗b(u) acting on the tensor product, `a` on the leftmost factor."""
    if a.dim is None or b.dim is None:
        raise ValueError("series_tensor needs operator series")
    return _cauchy(a, b, np.kron, a.dim * b.dim)


def series_invert(a: TruncSeries) -> TruncSeries:
    """
    Inverse of a series whose constant coefficient is the identity.

    Uses the recursion b_0 = 1, b_m = -sum_{i=1..m} a_i b_{m-i}.

    Args:
        a (TruncSeries): Series with lo = 0 and a_0 = 1 (or a nonzero scalar).

    Returns:
        TruncSeries: b with a·b = b·a = 1 through a.valid.

    Raises:
        ValueError: If the constant coefficient is not invertible by the recursion.
    """
    if a.lo < 0:
        raise ValueError(f"Cannot invert a series with positive powers (lo={a.lo})")
    a0 = a.coefficient(0)
    if a.dim is None:
        if a0 == 0:
            raise ValueError("Constant term of the series is zero")
        inv0: Coefficient = ONE / a0
    else:
        if not is_zero(a0 - identity(a.dim)):
            raise ValueError("Constant term of the operator series is not the identity")
        inv0 = identity(a.dim)
    out: list[Coefficient] = [inv0]
    for m in range(1, a.valid + 1):
        acc = _zero_like(a.dim)
        for i in range(1, m + 1):
            ai = a.coefficient(i)
            if _is_zero_coeff(ai):
                continue
            acc = acc + _times(ai, out[m - i])
        out.append(-_times(inv0, acc) if a.dim is None else -acc)
    return TruncSeries.from_coefficients(out, 0, a.valid, a.dim)


def series_shift(a: TruncSeries, c: RationalLike) -> TruncSeries:
    """
    Substitute u -> u + c.

    The coefficient of u^{-m} is sum_{r+j=m} a_r binom(-r, j) c^j; the
    validity order is unchanged.
    """
    q = rational(c)
    if q == 0:
        return a
    out = []
    for m in range(a.lo, a.valid + 1):
        acc = _zero_like(a.dim)
        for r in range(a.lo, m + 1):
            w = binomial(-r, m - r) * q ** (m - r)
            if w != 0:
                acc = acc + a.coefficient(r) * rational(w)
        out.append(acc)
    return TruncSeries.from_coefficients(out, a.lo, a.valid, a.dim)


def expand_at_infinity(f: RatFunc, order: int) -> TruncSeries:
    """
    Laurent expansion of a rational function at u = infinity.

    Args:
        f (RatFunc): The function.
        order (int): Validity order K of the result.

    Returns:
        TruncSeries: Scalar series exact through u^{-K}.

    Raises:
        ValueError: If f has a pole of order greater than 2 at infinity.
    """
    if f.is_zero:
        return TruncSeries.zero(order)
    num, den = poly_coeffs(f.num), poly_coeffs(f.den)
    lo = degree(f.den) - degree(f.num)
    if lo < -POSITIVE_POWER_WINDOW:
        raise ValueError(f"Pole order {-lo} at infinity exceeds the window of {POSITIVE_POWER_WINDOW}: {f}")
    top = list(reversed(num))
    bottom = list(reversed(den))
    q: list[Rational] = []
    for i in range(order - lo + 1):
        acc = top[i] if i < len(top) else ZERO
        for j in range(1, min(i, len(bottom) - 1) + 1):
            acc -= bottom[j] * q[i - j]
        q.append(acc)
    return TruncSeries.from_coefficients(q, lo, order)


def series_first_difference(a: TruncSeries, b: TruncSeries) -> int | None:
    """Smallest exponent, within the joint validity order, where a and b differ."""
    valid = min(a.valid, b.valid)
    dim = a.dim if a.dim is not None else b.dim
    x = a if dim is None else a.as_operator(dim)
    y = b if dim is None else b.as_operator(dim)
    for r in range(min(a.lo, b.lo), valid + 1):
        if not _is_zero_coeff(x.coefficient(r) - y.coefficient(r)):
            return r
    return None

