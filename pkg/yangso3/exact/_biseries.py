from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np

from yangso3.exact._matrix import OpMatrix, first_difference, zeros
from yangso3.exact._rational import ZERO, Rational, RationalLike, binomial, rational
from yangso3.exact._series import POSITIVE_POWER_WINDOW, TruncSeries


def _min(*xs: int | None) -> int | None:
    known = [x for x in xs if x is not None]
    return min(known) if known else None


def _plus(x: int | None, d: int) -> int | None:
    return None if x is None else x + d


@dataclass(frozen=True, eq=False)
class BiSeries:
    """
    Truncated operator series sum_{r,s} X_{r,s} u^{-r} v^{-s}.

    The stored block covers r in [lo_u, lo_u + nu - 1] and s in
    [lo_v, lo_v + nv - 1]. A coefficient (r, s) is known when
    r <= valid_u, s <= valid_v, r + s <= valid_total and s >= floor_v, where
    None means "no bound". Coefficients outside the stored block are zero
    when known. `floor_v` is set by the geometric expansion of 1/(u - v - c),
    whose positive powers of v are only kept down to the window.
    """

    coeffs: np.ndarray
    lo_u: int
    lo_v: int
    valid_u: int | None = None
    valid_v: int | None = None
    valid_total: int | None = None
    floor_v: int | None = None

    def __post_init__(self) -> None:
        if self.coeffs.ndim != 4:
            raise ValueError(f"BiSeries coefficients must have shape (nu, nv, D, D), got {self.coeffs.shape}")
        self.coeffs.setflags(write=False)

    @classmethod
    def from_u(cls, a: TruncSeries, dim: int | None = None) -> BiSeries:
        """Embed a(u) as a two-variable series."""
        a = a.as_operator(dim or a.dim or 1)
        return cls(np.asarray(a.coeffs, dtype=object)[:, None].copy(), a.lo, 0, a.valid, None)

    @classmethod
    def from_v(cls, a: TruncSeries, dim: int | None = None) -> BiSeries:
        """Embed a(v) as a two-variable series."""
        a = a.as_operator(dim or a.dim or 1)
        return cls(np.asarray(a.coeffs, dtype=object)[None, :].copy(), 0, a.lo, None, a.valid)

    @classmethod
    def constant(cls, c: OpMatrix) -> BiSeries:
        return cls(np.asarray(c, dtype=object)[None, None].copy(), 0, 0)

    @property
    def dim(self) -> int:
        return int(self.coeffs.shape[2])

    @property
    def hi_u(self) -> int:
        return self.lo_u + self.coeffs.shape[0] - 1

    @property
    def hi_v(self) -> int:
        return self.lo_v + self.coeffs.shape[1] - 1

    def known(self, r: int, s: int) -> bool:
        if self.valid_u is not None and r > self.valid_u:
            return False
        if self.valid_v is not None and s > self.valid_v:
            return False
        if self.valid_total is not None and r + s > self.valid_total:
            return False
        return self.floor_v is None or s >= self.floor_v

    def coefficient(self, r: int, s: int) -> OpMatrix:
        """
        Coefficient of u^{-r} v^{-s}.

        Raises:
            ValueError: If the coefficient is outside the validity window.
        """
        if not self.known(r, s):
            raise ValueError(f"Coefficient (u^-{r}, v^-{s}) is outside the validity window")
        return self._stored(r, s)

    def _stored(self, r: int, s: int) -> OpMatrix:
        if self.lo_u <= r <= self.hi_u and self.lo_v <= s <= self.hi_v:
            return self.coeffs[r - self.lo_u, s - self.lo_v]
        return zeros(self.dim)

    def _extract(self, r0: int, r1: int, s0: int, s1: int) -> np.ndarray:
        out = np.full((max(r1 - r0 + 1, 0), max(s1 - s0 + 1, 0), self.dim, self.dim), ZERO, dtype=object)
        a0, a1 = max(r0, self.lo_u), min(r1, self.hi_u)
        b0, b1 = max(s0, self.lo_v), min(s1, self.hi_v)
        if a0 <= a1 and b0 <= b1:
            out[a0 - r0 : a1 - r0 + 1, b0 - s0 : b1 - s0 + 1] = self.coeffs[
                a0 - self.lo_u : a1 - self.lo_u + 1, b0 - self.lo_v : b1 - self.lo_v + 1
            ]
        return out

    def _check_dim(self, other: BiSeries) -> None:
        if self.dim != other.dim:
            raise ValueError(f"Dimension mismatch: {self.dim} vs {other.dim}")

    def scale(self, c: RationalLike) -> BiSeries:
        return BiSeries(
            self.coeffs * rational(c), self.lo_u, self.lo_v, self.valid_u, self.valid_v, self.valid_total, self.floor_v
        )

    def __neg__(self) -> BiSeries:
        return self.scale(-1)

    def __add__(self, other: BiSeries) -> BiSeries:
        self._check_dim(other)
        valid_u = _min(self.valid_u, other.valid_u)
        valid_v = _min(self.valid_v, other.valid_v)
        floors = [f for f in (self.floor_v, other.floor_v) if f is not None]
        floor_v = max(floors) if floors else None
        lo_u = min(self.lo_u, other.lo_u)
        lo_v = min(self.lo_v, other.lo_v)
        if floor_v is not None:
            lo_v = max(lo_v, floor_v)
        hi_u = valid_u if valid_u is not None else max(self.hi_u, other.hi_u)
        hi_v = valid_v if valid_v is not None else max(self.hi_v, other.hi_v)
        coeffs = self._extract(lo_u, hi_u, lo_v, hi_v) + other._extract(lo_u, hi_u, lo_v, hi_v)
        total = _min(self.valid_total, other.valid_total)
        return BiSeries(coeffs, lo_u, lo_v, valid_u, valid_v, total, floor_v)

    def __sub__(self, other: BiSeries) -> BiSeries:
        return self + (-other)

    def __mul__(self, other: BiSeries) -> BiSeries:
        """
        Ordered product X(u, v)·Y(u, v).

        Raises:
            ValueError: If either factor carries a truncated v-floor.
        """
        self._check_dim(other)
        if self.floor_v is not None or other.floor_v is not None:
            raise ValueError("Cannot multiply series expanded in 1/(u - v); divide last")
        a, b = self.coeffs, other.coeffs
        full = np.full(
            (a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1, self.dim, self.dim), ZERO, dtype=object
        )
        if a.shape[0] * a.shape[1] <= b.shape[0] * b.shape[1]:
            for (i, j), x in _nonzero_blocks(a):
                full[i : i + b.shape[0], j : j + b.shape[1]] += np.matmul(x, b)
        else:
            for (i, j), y in _nonzero_blocks(b):
                full[i : i + a.shape[0], j : j + a.shape[1]] += np.matmul(a, y)
        lo_u, lo_v = self.lo_u + other.lo_u, self.lo_v + other.lo_v
        valid_u = _min(_plus(self.valid_u, other.lo_u), _plus(other.valid_u, self.lo_u))
        valid_v = _min(_plus(self.valid_v, other.lo_v), _plus(other.valid_v, self.lo_v))
        total = _min(
            _plus(self.valid_total, other.lo_u + other.lo_v), _plus(other.valid_total, self.lo_u + self.lo_v)
        )
        nu = full.shape[0] if valid_u is None else max(valid_u - lo_u + 1, 0)
        nv = full.shape[1] if valid_v is None else max(valid_v - lo_v + 1, 0)
        coeffs = np.full((nu, nv, self.dim, self.dim), ZERO, dtype=object)
        cu, cv = min(nu, full.shape[0]), min(nv, full.shape[1])
        coeffs[:cu, :cv] = full[:cu, :cv]
        return BiSeries(coeffs, lo_u, lo_v, valid_u, valid_v, total)

    def mul_poly(self, poly: Mapping[tuple[int, int], RationalLike]) -> BiSeries:
        """
        Multiply by the polynomial sum c_{ab} u^a v^b.

        A factor of degree a in u lowers `lo_u` and `valid_u` by a, and likewise
        for v and for the total degree.

        Raises:
            ValueError: If the result would need more than two positive powers.
        """
        terms = {k: rational(c) for k, c in poly.items() if rational(c) != 0}
        if not terms:
            return self.scale(0)
        du = max(a for a, _ in terms)
        dv = max(b for _, b in terms)
        dt = max(a + b for a, b in terms)
        lo_u = self.lo_u - du
        lo_v = self.lo_v - dv if self.floor_v is None else max(self.lo_v - dv, self.floor_v)
        if lo_u < -POSITIVE_POWER_WINDOW or lo_v < -POSITIVE_POWER_WINDOW:
            raise ValueError(
                f"Positive-power window exceeded: lo=({lo_u}, {lo_v}) after clearing a degree-{dt} polynomial"
            )
        valid_u = _plus(self.valid_u, -du)
        valid_v = _plus(self.valid_v, -dv)
        hi_u = self.hi_u if valid_u is None else valid_u
        hi_v = self.hi_v if valid_v is None else valid_v
        coeffs = np.full((max(hi_u - lo_u + 1, 0), max(hi_v - lo_v + 1, 0), self.dim, self.dim), ZERO, dtype=object)
        for (a, b), c in terms.items():
            coeffs += self._extract(lo_u + a, hi_u + a, lo_v + b, hi_v + b) * c
        return BiSeries(coeffs, lo_u, lo_v, valid_u, valid_v, _plus(self.valid_total, -dt), self.floor_v)

    def divide_by_difference(self, c: RationalLike, cap_u: int) -> BiSeries:
        """
        Multiply by 1/(u - v - c) expanded as sum_k (v + c)^k u^{-k-1}.

        Positive powers of v are kept down to the window; below it the result
        is marked unknown. The expansion reads ever higher powers of v, so the
        result is only valid for r + s within the operand's v-validity.

        Args:
            c (RationalLike): The shift c.
            cap_u (int): Largest u-exponent to compute when u is exact.

        Returns:
            BiSeries: The expanded quotient.
        """
        q = rational(c)
        lo_u = self.lo_u + 1
        hi_u = self.valid_u + 1 if self.valid_u is not None else cap_u
        lo_v = -POSITIVE_POWER_WINDOW
        hi_v = self.hi_v if self.valid_v is None else self.valid_v
        coeffs = np.full((max(hi_u - lo_u + 1, 0), max(hi_v - lo_v + 1, 0), self.dim, self.dim), ZERO, dtype=object)
        for k in range(hi_u - lo_u + 1):
            for j in range(k + 1):
                w = binomial(k, j) * q ** (k - j)
                if w == 0:
                    continue
                coeffs += self._extract(lo_u - k - 1, hi_u - k - 1, lo_v + j, hi_v + j) * rational(w)
        total = _min(_plus(self.valid_total, 1), _plus(self.valid_v, 1 + self.lo_u))
        return BiSeries(coeffs, lo_u, lo_v, hi_u, self.valid_v, total, lo_v)

    def swap_variables(self) -> BiSeries:
        """X(v, u)."""
        if self.floor_v is not None:
            raise ValueError("Cannot swap variables of a series expanded in 1/(u - v)")
        return BiSeries(
            self.coeffs.transpose(1, 0, 2, 3).copy(),
            self.lo_v,
            self.lo_u,
            self.valid_v,
            self.valid_u,
            self.valid_total,
        )


def _nonzero_blocks(a: np.ndarray) -> list[tuple[tuple[int, int], OpMatrix]]:
    out = []
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            block = a[i, j]
            if any(x != 0 for x in block.flat):
                out.append(((i, j), block))
    return out


@dataclass(frozen=True, eq=False)
class Comparison:
    """
    Outcome of a coefficientwise comparison of two series.

    On failure `r`, `s`, `row` and `col` locate the first differing entry in
    lexicographic (r, s) order and `lhs`/`rhs` hold both coefficient matrices.
    """

    passed: bool
    checked: int
    r: int | None = None
    s: int | None = None
    row: int | None = None
    col: int | None = None
    lhs: OpMatrix | None = None
    rhs: OpMatrix | None = None

    @property
    def lhs_entry(self) -> Rational | None:
        return None if self.lhs is None or self.row is None else self.lhs[self.row, self.col]

    @property
    def rhs_entry(self) -> Rational | None:
        return None if self.rhs is None or self.row is None else self.rhs[self.row, self.col]


def biseries_clear_and_compare(lhs: BiSeries, rhs: BiSeries) -> Comparison:
    """
    Compare two sides of an identity on their jointly valid coefficients.

    Args:
        lhs (BiSeries): Left side, already cleared of denominators.
        rhs (BiSeries): Right side, already cleared of denominators.

    Returns:
        Comparison: PASS when every jointly valid coefficient agrees, otherwise
        the lexicographically first differing (r, s) with both matrices.

    Raises:
        ValueError: If the operator dimensions differ.
    """
    lhs._check_dim(rhs)
    r_lo, r_hi = min(lhs.lo_u, rhs.lo_u), max(lhs.hi_u, rhs.hi_u)
    s_lo, s_hi = min(lhs.lo_v, rhs.lo_v), max(lhs.hi_v, rhs.hi_v)
    checked = 0
    for r in range(r_lo, r_hi + 1):
        for s in range(s_lo, s_hi + 1):
            if not (lhs.known(r, s) and rhs.known(r, s)):
                continue
            a, b = lhs._stored(r, s), rhs._stored(r, s)
            checked += 1
            where = first_difference(a, b)
            if where is not None:
                return Comparison(False, checked, r, s, where[0], where[1], a, b)
    return Comparison(True, checked)


def series_compare(lhs: TruncSeries, rhs: TruncSeries, dim: int | None = None) -> Comparison:
    """Single-variable comparison through the joint validity order, reported with s = 0."""
    return biseries_clear_and_compare(BiSeries.from_u(lhs, dim), BiSeries.from_u(rhs, dim))
