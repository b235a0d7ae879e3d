from __future__ import annotations

import sys
from collections.abc import Iterable, Sequence

import numpy as np

from yangso3.exact._rational import ONE, ZERO, Rational, RationalLike, rational

if sys.version_info >= (3, 10):
    from typing import TypeAlias
else:
    from typing_extensions import TypeAlias

# Dense square matrix of exact rationals (numpy object array, no floats).
OpMatrix: TypeAlias = np.ndarray


def zeros(dim: int) -> OpMatrix:
    return np.full((dim, dim), ZERO, dtype=object)


def identity(dim: int) -> OpMatrix:
    m = zeros(dim)
    for i in range(dim):
        m[i, i] = ONE
    return m


def unit(dim: int, row: int, col: int, value: RationalLike = 1) -> OpMatrix:
    m = zeros(dim)
    m[row, col] = rational(value)
    return m


def from_rows(rows: Sequence[Sequence[RationalLike]]) -> OpMatrix:
    """Build an exact square matrix from nested rows."""
    dim = len(rows)
    if any(len(r) != dim for r in rows):
        raise ValueError(f"Matrix must be square, got row lengths {[len(r) for r in rows]}")
    m = zeros(dim)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            m[i, j] = rational(x)
    return m


def as_exact(array: np.ndarray) -> OpMatrix:
    """Copy an integer or rational array into an object array of `mpq`."""
    out = np.empty(array.shape, dtype=object)
    for idx, x in np.ndenumerate(array):
        out[idx] = rational(int(x)) if isinstance(x, np.integer) else rational(x)
    return out


def kron(a: OpMatrix, b: OpMatrix) -> OpMatrix:
    """Kronecker product, leftmost factor most significant."""
    return np.kron(a, b)


def is_zero(m: np.ndarray) -> bool:
    return all(x == 0 for x in m.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def first_difference(a: np.ndarray, b: np.ndarray) -> tuple[int, ...] | None:
    """Index of the first entry (row-major) where `a` and `b` differ."""
    if a.shape != b.shape:
        raise ValueError(f"Shape mismatch: {a.shape} vs {b.shape}")
    for idx, x in np.ndenumerate(a):
        if x != b[idx]:
            return tuple(int(i) for i in idx)
    return None


def scalar_value(m: OpMatrix) -> Rational | None:
    """Return c if `m` equals c times the identity, otherwise None."""
    c = m[0, 0]
    for (i, j), x in np.ndenumerate(m):
        if x != (c if i == j else 0):
            return None
    return rational(c)


def entries(values: Iterable[RationalLike]) -> list[Rational]:
    return [rational(x) for x in values]
