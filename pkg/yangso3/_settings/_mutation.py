from __future__ import annotations

from dataclasses import dataclass

from yangso3.exact import Rational, format_rational, parse_rational

GAUSS_TARGETS = ("kMinus1", "k0", "k1", "eM10", "e01", "eM11", "f0M1", "f10", "f1M1")
CURRENT_TARGETS = ("Xplus", "Xminus", "H")
ENTRY_TARGETS = tuple(f"t{i}{j}" for i in (-1, 0, 1) for j in (-1, 0, 1))

# Targets each suite accepts.
MUTATION_TARGETS: dict[str, tuple[str, ...]] = {
    "rmatrix": ("P", "Q"),
    "rtt": ENTRY_TARGETS,
    "unitarity": (*ENTRY_TARGETS, "c"),
    "gauss": GAUSS_TARGETS,
    "relations": GAUSS_TARGETS,
    "roundtrip": GAUSS_TARGETS,
    "drinfeld": (*GAUSS_TARGETS, *CURRENT_TARGETS),
}


@dataclass(frozen=True)
class Mutation:
    """
    A single stored coefficient shifted by `delta` before one suite runs.

    For series targets `index` is the exponent r of the u^{-r} coefficient
    whose (0, 0) entry is perturbed; for `P` and `Q` it is the flat entry
    position.
    """

    suite: str
    target: str
    index: int
    delta: Rational

    @classmethod
    def parse(cls, text: str) -> Mutation:
        """
        Parse "suite:target:index:delta", e.g. "gauss:kMinus1:1:+1".

        Raises:
            ValueError: If the text is malformed or the target does not belong to the suite.
        """
        parts = text.split(":")
        if len(parts) != 4:
            raise ValueError(f"Mutation must read suite:target:index:delta, got {text!r}")
        suite, target, index, delta = (p.strip() for p in parts)
        if suite not in MUTATION_TARGETS:
            raise ValueError(f"Mutation suite {suite!r} unknown; choose from {sorted(MUTATION_TARGETS)}")
        if target not in MUTATION_TARGETS[suite]:
            raise ValueError(f"Suite {suite!r} cannot mutate {target!r}; targets: {list(MUTATION_TARGETS[suite])}")
        try:
            r = int(index)
        except ValueError:
            raise ValueError(f"Mutation index must be an integer, got {index!r}") from None
        if r < 0:
            raise ValueError(f"Mutation index must be non-negative, got {r}")
        value = parse_rational(delta)
        if value == 0:
            raise ValueError("Mutation delta must be non-zero")
        return cls(suite, target, r, value)

    def __str__(self) -> str:
        return f"{self.suite}:{self.target}:{self.index}:{format_rational(self.delta)}"

    @property
    def entry(self) -> tuple[int, int]:
        """Labels (i, j) of an entry target such as "t-10"."""
        if self.target not in ENTRY_TARGETS:
            raise ValueError(f"{self.target!r} is not an entry of T(u)")
        i, j = divmod(ENTRY_TARGETS.index(self.target), 3)
        return i - 1, j - 1
