from __future__ import annotations

from dataclasses import dataclass, fields, replace

from yangso3.exact import HALF, RationalLike, TruncSeries, series_invert, series_mul, series_shift
from yangso3.rep import RepT, matrix_product

# Series names as used in catalog expressions and mutation targets.
SERIES_NAMES = {
    "k_minus1": "kMinus1",
    "k0": "k0",
    "k1": "k1",
    "e_m10": "eM10",
    "e01": "e01",
    "e_m11": "eM11",
    "f0_m1": "f0M1",
    "f10": "f10",
    "f1_m1": "f1M1",
}
FIELD_NAMES = {v: k for k, v in SERIES_NAMES.items()}


@dataclass(frozen=True, eq=False)
class GaussData:
    """
    Gauss generators of T(u) = F(u)K(u)E(u).

    F is lower unitriangular with entries f_{0,-1}, f_{1,-1}, f_{10}; K is
    diag(k_{-1}, k_0, k_1); E is upper unitriangular with entries e_{-1,0},
    e_{-1,1}, e_{01}.
    """

    k_minus1: TruncSeries
    k0: TruncSeries
    k1: TruncSeries
    e_m10: TruncSeries
    e01: TruncSeries
    e_m11: TruncSeries
    f0_m1: TruncSeries
    f10: TruncSeries
    f1_m1: TruncSeries

    @property
    def dim(self) -> int:
        return int(self.k_minus1.dim)  # type: ignore[arg-type]

    @property
    def order(self) -> int:
        return min(getattr(self, f.name).valid for f in fields(self))

    def env(self) -> dict[str, TruncSeries]:
        """The nine series under their catalog names."""
        return {SERIES_NAMES[f.name]: getattr(self, f.name) for f in fields(self)}

    def series(self, name: str) -> TruncSeries:
        """Look a series up by field name or catalog name."""
        return getattr(self, FIELD_NAMES.get(name, name))

    def with_perturbed(self, name: str, r: int, delta: RationalLike) -> GaussData:
        """Copy with `delta` added to entry (0, 0) of the u^{-r} coefficient of one series."""
        field = FIELD_NAMES.get(name, name)
        if field not in SERIES_NAMES:
            raise ValueError(f"Unknown Gauss generator {name!r}; known: {sorted(FIELD_NAMES)}")
        return replace(self, **{field: getattr(self, field).with_perturbed(r, delta)})


def gauss_decompose(T: RepT) -> GaussData:
    """
    Compute the Gauss generators of T(u) by block elimination.

    Args:
        T (RepT): Generating matrix with t_{-1,-1} and the derived k_0 having
            the identity as constant term.

    Returns:
        GaussData: The nine generators, valid through the order of T.

    Raises:
        ValueError: If a pivot k_{-1} or k_0 does not lead with the identity.
    """
    k_m1 = T(-1, -1)
    k_m1_inv = series_invert(k_m1)
    e_m10 = k_m1_inv * T(-1, 0)
    e_m11 = k_m1_inv * T(-1, 1)
    f0_m1 = T(0, -1) * k_m1_inv
    f1_m1 = T(1, -1) * k_m1_inv
    k0 = T(0, 0) - f0_m1 * k_m1 * e_m10
    k0_inv = series_invert(k0)
    e01 = k0_inv * (T(0, 1) - f0_m1 * k_m1 * e_m11)
    f10 = (T(1, 0) - f1_m1 * k_m1 * e_m10) * k0_inv
    k1 = T(1, 1) - f1_m1 * k_m1 * e_m11 - f10 * k0 * e01
    return GaussData(k_m1, k0, k1, e_m10, e01, e_m11, f0_m1, f10, f1_m1)


def factor_matrices(G: GaussData) -> tuple[RepT, RepT, RepT]:
    """The matrices F(u), K(u), E(u) of the decomposition."""
    K, D = G.order, G.dim
    one, zero = TruncSeries.one(K, D), TruncSeries.zero(K, D)
    F = RepT.from_positions([[one, zero, zero], [G.f0_m1, one, zero], [G.f1_m1, G.f10, one]])
    diag = RepT.from_positions([[G.k_minus1, zero, zero], [zero, G.k0, zero], [zero, zero, G.k1]])
    E = RepT.from_positions([[one, G.e_m10, G.e_m11], [zero, one, G.e01], [zero, zero, one]])
    return F, diag, E


def reconstruct_T(G: GaussData) -> RepT:
    """T(u) = F(u)K(u)E(u)."""
    F, diag, E = factor_matrices(G)
    return matrix_product(matrix_product(F, diag), E)


def reconstruct_from_generators(
    k_minus1: TruncSeries, e_m10: TruncSeries, f0_m1: TruncSeries
) -> GaussData:
    """
    Rebuild all nine Gauss generators from k_{-1}, e_{-1,0} and f_{0,-1}.

    Uses k_0(u) = k_{-1}(u)k_{-1}^{-1}(u+1/2), k_1(u) = k_{-1}^{-1}(u+1/2),
    e_01(u) = -e_{-1,0}(u-1/2), f_10(u) = -f_{0,-1}(u-1/2),
    e_{-1,1}(u) = -e_{-1,0}(u)^2/2 and f_{1,-1}(u) = -f_{0,-1}(u)^2/2.
    """
    k_shift_inv = series_invert(series_shift(k_minus1, HALF))
    k0 = series_mul(k_minus1, k_shift_inv)
    e01 = -series_shift(e_m10, -HALF)
    f10 = -series_shift(f0_m1, -HALF)
    e_m11 = series_mul(e_m10, e_m10).scale(-HALF)
    f1_m1 = series_mul(f0_m1, f0_m1).scale(-HALF)
    return GaussData(k_minus1, k0, k_shift_inv, e_m10, e01, e_m11, f0_m1, f10, f1_m1)
