from __future__ import annotations

from dataclasses import dataclass, replace

from yangso3.exact import OpMatrix, RationalLike, TruncSeries, identity, series_invert, series_mul, zeros
from yangso3.gauss import GaussData

CURRENT_NAMES = ("Xplus", "Xminus", "H")


@dataclass(frozen=True, eq=False)
class Currents:
    """Drinfeld currents X^+(u), X^-(u) and H(u) inside a representation."""

    Xplus: TruncSeries
    Xminus: TruncSeries
    H: TruncSeries

    @property
    def order(self) -> int:
        return min(self.Xplus.valid, self.Xminus.valid, self.H.valid)

    @property
    def dim(self) -> int:
        return int(self.H.dim)  # type: ignore[arg-type]

    def env(self) -> dict[str, TruncSeries]:
        return {name: getattr(self, name) for name in CURRENT_NAMES}

    def with_perturbed(self, name: str, r: int, delta: RationalLike) -> Currents:
        if name not in CURRENT_NAMES:
            raise ValueError(f"Unknown current {name!r}; known: {list(CURRENT_NAMES)}")
        return replace(self, **{name: getattr(self, name).with_perturbed(r, delta)})


@dataclass(frozen=True, eq=False)
class Modes:
    """
    Modes x^±_k and h_k, k = 0..K-1.

    x^±_k is the u^{-k-1} coefficient of X^±(u) and h_k that of H(u) - 1.
    """

    x_plus: tuple[OpMatrix, ...]
    x_minus: tuple[OpMatrix, ...]
    h: tuple[OpMatrix, ...]

    @property
    def count(self) -> int:
        return len(self.h)

    def x(self, sign: int) -> tuple[OpMatrix, ...]:
        return self.x_plus if sign > 0 else self.x_minus


def phi_map(G: GaussData) -> Currents:
    """
    Images of the currents under X^- -> e_{-1,0}, X^+ -> f_{0,-1}, H -> k_{-1}^{-1}k_0.

    Args:
        G (GaussData): Gauss generators of a representation.

    Returns:
        Currents: The currents in the same representation.
    """
    return Currents(G.f0_m1, G.e_m10, series_mul(series_invert(G.k_minus1), G.k0))


def extract_modes(C: Currents) -> Modes:
    """
    Read off the modes of every current.

    Mode k is taken only when k + 1 lies within the validity order.
    """
    K = C.order
    return Modes(
        tuple(C.Xplus.coefficient(k + 1) for k in range(K)),
        tuple(C.Xminus.coefficient(k + 1) for k in range(K)),
        tuple(C.H.coefficient(k + 1) for k in range(K)),
    )


def currents_from_modes(M: Modes, dim: int) -> Currents:
    """Resum 1 + sum_k h_k u^{-k-1} and sum_k x^±_k u^{-k-1}."""
    K = M.count
    return Currents(
        TruncSeries.from_coefficients([zeros(dim), *M.x_plus], 0, K, dim),
        TruncSeries.from_coefficients([zeros(dim), *M.x_minus], 0, K, dim),
        TruncSeries.from_coefficients([identity(dim), *M.h], 0, K, dim),
    )
