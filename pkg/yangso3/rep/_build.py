from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from yangso3.exact import (
    ZERO,
    RatFunc,
    Rational,
    RationalLike,
    TruncSeries,
    expand_at_infinity,
    rational,
    scalar_value,
    series_invert,
    series_mul,
    series_shift,
    series_tensor,
)
from yangso3.rep._rept import EvalParams, RepT, RepTInv
from yangso3.rmatrix import RMatrixFamily, build_R


class NotScalarError(ValueError):
    """T(u)T^t(u + kappa) of the raw representation is not a scalar series."""


@dataclass(frozen=True, eq=False)
class NormScalar:
    """
    Scalar normalization c(u) of an evaluation representation.

    `g` is the scalar with T(u)T^t(u + kappa) = g(u)·1 for the raw
    representation; `c` solves c(u)c(u + kappa)g(u) = 1 with c_0 = 1.
    """

    c: TruncSeries
    g: TruncSeries
    kappa: Rational

    def with_perturbed(self, r: int, delta: RationalLike) -> NormScalar:
        return NormScalar(self.c.with_perturbed(r, delta), self.g, self.kappa)


def _family(fam: RMatrixFamily | None) -> RMatrixFamily:
    fam = fam or build_R(3)
    if fam.N != 3:
        raise ValueError(f"Representations of Y(so_3) need the N=3 R-matrix, got N={fam.N}")
    return fam


def eval_rep_raw(a: RationalLike, order: int, fam: RMatrixFamily | None = None) -> RepT:
    """
    Evaluation representation t_ij(u) -> R(u - a) on C^3, before normalization.

    The operator of t_ij has entries rho(t_ij)_{kl} = R(u - a)_{(i,k),(j,l)}.

    Args:
        a (RationalLike): The evaluation point.
        order (int): Truncation order K.
        fam (RMatrixFamily | None): The so_3 R-matrix; built when omitted.

    Returns:
        RepT: Entries expanded at infinity through u^{-K}.
    """
    fam = _family(fam)
    shift = -rational(a)
    expansions: dict[RatFunc, TruncSeries] = {}

    def expand(f: RatFunc) -> TruncSeries:
        if f not in expansions:
            expansions[f] = expand_at_infinity(f.shift(shift), order)
        return expansions[f]

    rows = []
    for p in range(3):
        row = []
        for q in range(3):
            coeffs = [np.full((3, 3), ZERO, dtype=object) for _ in range(order + 1)]
            for k in range(3):
                for l in range(3):
                    s = expand(fam.R[p * 3 + k, q * 3 + l])
                    if s.lo < 0:
                        raise ValueError(f"R-matrix entry at ({p},{k}),({q},{l}) grows at infinity")
                    for r in range(order + 1):
                        coeffs[r][k, l] = s.coefficient(r)
            row.append(TruncSeries.from_coefficients(coeffs, 0, order, 3))
        rows.append(row)
    return RepT.from_positions(rows)


def transpose_T(T: RepT, shift: RationalLike = 0) -> RepT:
    """
    T^t(u + shift), with (T^t)_ij = t_{-j,-i}.

    Args:
        T (RepT): The generating matrix.
        shift (RationalLike): The argument shift. Defaults to 0.

    Returns:
        RepT: The shifted transpose.
    """
    c = rational(shift)
    return RepT.from_positions(
        [[series_shift(T.entries[2 - q][2 - p], c) for q in range(3)] for p in range(3)]
    )


def unitarity_products(T: RepT, kappa: RationalLike) -> tuple[RepT, RepT]:
    """The matrices T(u)T^t(u + kappa) and T^t(u + kappa)T(u)."""
    Tt = transpose_T(T, kappa)
    return matrix_product(T, Tt), matrix_product(Tt, T)


def matrix_product(A: RepT, B: RepT) -> RepT:
    """Product of generating matrices over the auxiliary index."""
    return RepT.from_positions(
        [
            [_sum(series_mul(A.entries[p][k], B.entries[k][q]) for k in range(3)) for q in range(3)]
            for p in range(3)
        ]
    )


def _sum(terms: Iterable[TruncSeries]) -> TruncSeries:
    it = iter(terms)
    acc = next(it)
    for x in it:
        acc = acc + x
    return acc


def normalize_scalar(a: RationalLike, order: int, fam: RMatrixFamily | None = None) -> NormScalar:
    """
    Solve c(u)c(u + kappa)g(u) = 1 for the evaluation representation at `a`.

    g(u) is read from the (-1, -1) entry of T(u)T^t(u + kappa) after every
    entry has been checked to be g(u)·delta_ik·I. With h = g^{-1}, the
    coefficient c_r enters c(u)c(u + kappa) at order r as 2c_r plus terms in
    c_1, ..., c_{r-1} only, so c is found one coefficient at a time.

    Args:
        a (RationalLike): The evaluation point.
        order (int): Truncation order K.
        fam (RMatrixFamily | None): The so_3 R-matrix.

    Returns:
        NormScalar: The normalization c together with g.

    Raises:
        NotScalarError: If T(u)T^t(u + kappa) has off-scalar entries.
    """
    fam = _family(fam)
    raw = eval_rep_raw(a, order, fam)
    M, _ = unitarity_products(raw, fam.kappa)
    g: list[Rational] = []
    for r in range(order + 1):
        value = scalar_value(M.entries[0][0].coefficient(r))
        if value is None:
            raise NotScalarError(f"Coefficient u^-{r} of T(u)T^t(u+kappa) is not scalar at entry (-1,-1)")
        for p in range(3):
            for q in range(3):
                expected = value if p == q else ZERO
                m = M.entries[p][q].coefficient(r)
                if scalar_value(m) != expected:
                    raise NotScalarError(
                        f"T(u)T^t(u+kappa) is not scalar: entry ({p - 1},{q - 1}) at u^-{r}"
                    )
        g.append(value)
    if g[0] != 1:
        raise NotScalarError(f"Constant term of g(u) is {g[0]}, expected 1")
    g_series = TruncSeries.from_coefficients(g, 0, order)
    h = series_invert(g_series)
    c: list[Rational] = [rational(1)] + [ZERO] * order
    for r in range(1, order + 1):
        trial = TruncSeries.from_coefficients(c, 0, order)
        prod = series_mul(trial, series_shift(trial, fam.kappa))
        c[r] = (h.coefficient(r) - prod.coefficient(r)) / 2
    return NormScalar(TruncSeries.from_coefficients(c, 0, order), g_series, fam.kappa)


def normalized_eval_rep(
    a: RationalLike, order: int, fam: RMatrixFamily | None = None, norm: NormScalar | None = None
) -> RepT:
    """c(u)·eval_rep_raw(a), satisfying T(u)T^t(u + kappa) = 1."""
    fam = _family(fam)
    norm = norm or normalize_scalar(a, order, fam)
    return eval_rep_raw(a, order, fam).map(lambda s: series_mul(norm.c, s))


def tensor_rep(T1: RepT, T2: RepT) -> RepT:
    """
    Coproduct t_ij = sum_k t_ik ⊗ t_kj.

    The operators of `T1` act on the leftmost tensor factor.
    """
    return RepT.from_positions(
        [
            [_sum(series_tensor(T1.entries[p][k], T2.entries[k][q]) for k in range(3)) for q in range(3)]
            for p in range(3)
        ]
    )


def build_rep(
    params: EvalParams,
    fam: RMatrixFamily | None = None,
    normalizers: Sequence[NormScalar | None] | None = None,
) -> RepT:
    """
    Normalized tensor product of evaluation representations.

    Args:
        params (EvalParams): Evaluation points a_1, ..., a_m and order K.
        fam (RMatrixFamily | None): The so_3 R-matrix.
        normalizers (Sequence[NormScalar | None] | None):
            Normalizations to use instead of the computed ones, aligned with
            the points; entries left as None are computed.

    Returns:
        RepT: The representation on (C^3)^{⊗m}, the point a_1 acting on the
        leftmost factor.

    Raises:
        NotScalarError: If some point has no scalar normalization.
    """
    fam = _family(fam)
    norms = list(normalizers or [])
    norms += [None] * (params.depth - len(norms))
    reps = [normalized_eval_rep(a, params.order, fam, n) for a, n in zip(params.points, norms)]
    T = reps[0]
    for other in reps[1:]:
        T = tensor_rep(T, other)
    return T


def invert_T(T: RepT) -> RepTInv:
    """
    T^{-1}(u) through the flattened series on C^3 ⊗ C^D.

    Raises:
        ValueError: If the constant term of T is not the identity.
    """
    if not T.constant_is_identity():
        raise ValueError("The generating matrix must have the identity as constant term to be inverted")
    inv = RepT.unflatten(series_invert(T.flatten()))
    return RepTInv.from_positions(inv.entries)  # type: ignore[return-value]
