from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from yangso3.exact import Rational, RationalLike, TruncSeries, identity, rational
from yangso3.rmatrix import SoIndexing

SO3 = SoIndexing(3)
LABELS = SO3.labels


def series_name(prefix: str, i: int, j: int) -> str:
    """Environment name of an entry, e.g. "t-10" for t_{-1,0}."""
    return f"{prefix}{i}{j}"


@dataclass(frozen=True)
class EvalParams:
    """
    Evaluation points and truncation order of a tensor representation.

    Args:
        points (Sequence[RationalLike]): Points a_1, ..., a_m.
        order (int): Truncation order K.
    """

    points: tuple[Rational, ...]
    order: int

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("At least one evaluation point is required")
        if self.order < 1:
            raise ValueError(f"Truncation order must be positive, got {self.order}")
        object.__setattr__(self, "points", tuple(rational(a) for a in self.points))

    @property
    def depth(self) -> int:
        return len(self.points)

    @property
    def dim(self) -> int:
        return 3**self.depth


@dataclass(frozen=True, eq=False)
class RepT:
    """
    A 3x3 generating matrix of operator series, indexed by labels -1, 0, 1.

    `entries[p][q]` holds the entry at positions (p, q); call the object with
    labels instead, `T(-1, 0)`.
    """

    entries: tuple[tuple[TruncSeries, ...], ...]
    prefix: str = field(default="t", init=False)

    def __post_init__(self) -> None:
        if len(self.entries) != 3 or any(len(row) != 3 for row in self.entries):
            raise ValueError("A generating matrix of so_3 has 3x3 entries")
        dims = {s.dim for row in self.entries for s in row}
        if len(dims) != 1 or None in dims:
            raise ValueError(f"Entries must be operator series of one dimension, got {dims}")

    @classmethod
    def from_positions(cls, entries: Sequence[Sequence[TruncSeries]]) -> RepT:
        return cls(tuple(tuple(row) for row in entries))

    @classmethod
    def identity(cls, order: int, dim: int = 1) -> RepT:
        one, zero = TruncSeries.one(order, dim), TruncSeries.zero(order, dim)
        return cls.from_positions([[one if p == q else zero for q in range(3)] for p in range(3)])

    def __call__(self, i: int, j: int) -> TruncSeries:
        return self.entries[SO3.position(i)][SO3.position(j)]

    @property
    def dim(self) -> int:
        return int(self.entries[0][0].dim)  # type: ignore[arg-type]

    @property
    def order(self) -> int:
        return min(s.valid for row in self.entries for s in row)

    def env(self) -> dict[str, TruncSeries]:
        """Named entries for the relation evaluator."""
        return {series_name(self.prefix, i, j): self(i, j) for i in LABELS for j in LABELS}

    def map(self, fn: Callable[[TruncSeries], TruncSeries]) -> RepT:
        return type(self).from_positions([[fn(s) for s in row] for row in self.entries])

    def with_perturbed(self, i: int, j: int, r: int, delta: RationalLike) -> RepT:
        """Copy with `delta` added to entry (0, 0) of the u^{-r} coefficient of t_ij."""
        p, q = SO3.position(i), SO3.position(j)
        rows = [list(row) for row in self.entries]
        rows[p][q] = rows[p][q].with_perturbed(r, delta)
        return type(self).from_positions(rows)

    def flatten(self) -> TruncSeries:
        """
        One series on C^3 ⊗ C^D, the auxiliary index most significant.

        Block (p, q) of every coefficient is the coefficient of entry (p, q).
        """
        D, K = self.dim, self.order
        coeffs = []
        for r in range(K + 1):
            m = np.empty((3 * D, 3 * D), dtype=object)
            for p in range(3):
                for q in range(3):
                    m[p * D : (p + 1) * D, q * D : (q + 1) * D] = self.entries[p][q].coefficient(r)
            coeffs.append(m)
        return TruncSeries.from_coefficients(coeffs, 0, K, 3 * D)

    @classmethod
    def unflatten(cls, s: TruncSeries) -> RepT:
        if s.dim is None or s.dim % 3:
            raise ValueError(f"Cannot split a series of dimension {s.dim} into 3x3 blocks")
        D = s.dim // 3
        rows = []
        for p in range(3):
            row = []
            for q in range(3):
                blocks = [s.coefficient(r)[p * D : (p + 1) * D, q * D : (q + 1) * D].copy() for r in range(s.lo, s.valid + 1)]
                row.append(TruncSeries.from_coefficients(blocks, s.lo, s.valid, D))
            rows.append(row)
        return cls.from_positions(rows)

    def constant_is_identity(self) -> bool:
        eye = identity(self.dim)
        return all(
            np.array_equal(self.entries[p][q].coefficient(0), eye if p == q else eye * 0)
            for p in range(3)
            for q in range(3)
        )


@dataclass(frozen=True, eq=False)
class RepTInv(RepT):
    """Entries t'_ij(u) of the inverse generating matrix."""

    prefix: str = field(default="tp", init=False)
