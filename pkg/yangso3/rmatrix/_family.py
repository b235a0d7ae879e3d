from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from yangso3.exact import OpMatrix, RatFunc, Rational, RationalLike, as_exact, poly, rational
from yangso3.rmatrix._indexing import SoIndexing


def build_P(N: int) -> OpMatrix:
    """
    Flip operator on C^N ⊗ C^N.

    The pair (a, b) of positions sits at row a·N + b (leftmost factor most
    significant).
    """
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    eye = np.eye(N, dtype=np.int64)
    return as_exact(np.einsum("ad,bc->abcd", eye, eye).reshape(N * N, N * N))


def build_Q(N: int) -> OpMatrix:
    """Q = sum_{i,j} e_ij ⊗ e_{-i,-j}."""
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    flip = np.fliplr(np.eye(N, dtype=np.int64))
    return as_exact(np.einsum("ab,cd->abcd", flip, flip).reshape(N * N, N * N))


def partial_transpose(m: OpMatrix, N: int) -> OpMatrix:
    """Transpose in the first tensor factor under (e_ij)^t = e_{-j,-i}."""
    m4 = m.reshape(N, N, N, N)
    return np.ascontiguousarray(m4.transpose(2, 1, 0, 3)[::-1, :, ::-1, :]).reshape(N * N, N * N)


@dataclass(frozen=True, eq=False)
class RMatrixFamily:
    """
    The operators P, Q and R(u) = I - P/u + Q/(u - kappa) for so_N.

    `P` and `Q` may be replaced (see `with_perturbed`); R is always rebuilt
    from the stored pair.
    """

    indexing: SoIndexing
    kappa: Rational
    P: OpMatrix
    Q: OpMatrix

    @property
    def N(self) -> int:
        return self.indexing.N

    @cached_property
    def R(self) -> np.ndarray:
        """N^2 x N^2 object array of `RatFunc` entries."""
        n2 = self.N * self.N
        # common denominator u(u - kappa)
        den = poly([0, -self.kappa, 1])
        cache: dict[tuple[Rational, Rational, Rational], RatFunc] = {}
        out = np.empty((n2, n2), dtype=object)
        for x in range(n2):
            for y in range(n2):
                key = (rational(int(x == y)), self.P[x, y], self.Q[x, y])
                if key not in cache:
                    d, p, q = key
                    num = poly([p * self.kappa, d * (-self.kappa) - p + q, d])
                    cache[key] = RatFunc(num, den)
                out[x, y] = cache[key]
        return out

    def with_perturbed(self, target: str, index: int, delta: RationalLike) -> RMatrixFamily:
        """Copy with `delta` added to the flat entry `index` of P or Q."""
        if target not in ("P", "Q"):
            raise ValueError(f"Unknown R-matrix component: {target!r}")
        m = getattr(self, target).copy()
        if not 0 <= index < m.size:
            raise ValueError(f"Entry {index} out of range for a {m.shape[0]}x{m.shape[1]} matrix")
        flat = m.reshape(-1)
        flat[index] = flat[index] + rational(delta)
        P, Q = (m, self.Q) if target == "P" else (self.P, m)
        return RMatrixFamily(self.indexing, self.kappa, P, Q)


def build_R(N: int) -> RMatrixFamily:
    """
    Build the rational R-matrix family of so_N.

    Args:
        N (int): Matrix size, at least 3.

    Returns:
        RMatrixFamily: P, Q, kappa = N/2 - 1 and the entrywise R(u).
    """
    if N < 3:
        raise ValueError(f"The so_N R-matrix needs N >= 3, got {N}")
    return RMatrixFamily(SoIndexing(N), rational(f"{N - 2}/2"), build_P(N), build_Q(N))
