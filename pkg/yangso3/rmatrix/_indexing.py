from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SoIndexing:
    """
    Row and column labels of so_N matrices.

    Labels run (-n, ..., -1, 1, ..., n) for N = 2n and (-n, ..., -1, 0, 1, ..., n)
    for N = 2n + 1, mapped to positions 0..N-1 in that order.
    """

    N: int
    labels: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        if self.N < 2:
            raise ValueError(f"so_N needs N >= 2, got {self.N}")
        n = self.N // 2
        if self.N % 2:
            labels = tuple(range(-n, n + 1))
        else:
            labels = tuple(range(-n, 0)) + tuple(range(1, n + 1))
        object.__setattr__(self, "labels", labels)

    def position(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"Label {label} is not an index of so_{self.N}") from None

    def label(self, position: int) -> int:
        return self.labels[position]

    def reverse(self, position: int) -> int:
        """Position of the label -i given the position of i."""
        return self.N - 1 - position
