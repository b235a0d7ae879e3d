from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np
import sympy

from yangso3.catalog._verdict import Verdict
from yangso3.exact import (
    U,
    V,
    OpMatrix,
    RatFunc,
    Rational,
    RationalLike,
    bivariate_terms,
    first_difference,
    format_rational,
    identity,
    rational,
    to_sympy,
)
from yangso3.rmatrix._family import RMatrixFamily, partial_transpose

_INT64_HEADROOM = 2**62
_BASIS = ("I", "P", "Q")


def _matrix_verdict(identity_id: str, instance: str, lhs: OpMatrix, rhs: OpMatrix) -> Verdict:
    where = first_difference(lhs, rhs)
    if where is None:
        return Verdict(identity_id, instance, True)
    row, col = where
    return Verdict(
        identity_id,
        instance,
        False,
        row=row,
        col=col,
        lhs=format_rational(lhs[row, col]),
        rhs=format_rational(rhs[row, col]),
    )


def check_structure(fam: RMatrixFamily) -> list[Verdict]:
    """
    Verify P^2 = I, Q^2 = N·Q, PQ = QP = Q and Q = P^t (first factor).

    Returns:
        list[Verdict]: One verdict per identity, instance "N=<N>".
    """
    N, P, Q = fam.N, fam.P, fam.Q
    inst = f"N={N}"
    eye = identity(N * N)
    return [
        _matrix_verdict("rmatrix.flip_involution", inst, P @ P, eye),
        _matrix_verdict("rmatrix.q_square", inst, Q @ Q, Q * rational(N)),
        _matrix_verdict("rmatrix.pq_absorb", inst, P @ Q, Q),
        _matrix_verdict("rmatrix.qp_absorb", inst, Q @ P, Q),
        _matrix_verdict("rmatrix.q_partial_transpose", inst, Q, partial_transpose(P, N)),
    ]


def _integer_basis(fam: RMatrixFamily) -> tuple[dict[str, np.ndarray], int]:
    """I, P, Q scaled by the lcm of all entry denominators, as Python-int arrays."""
    scale = 1
    for x in (*fam.P.flat, *fam.Q.flat):
        scale = math.lcm(scale, int(rational(x).denominator))
    mats = {"I": identity(fam.N * fam.N), "P": fam.P, "Q": fam.Q}
    return {k: np.vectorize(lambda x: int(x * scale), otypes=[object])(m) for k, m in mats.items()}, scale


def _embeddings(fam: RMatrixFamily, basis: dict[str, np.ndarray]) -> dict[tuple[str, str], np.ndarray]:
    """X12, X13 and X23 on C^N ⊗ C^N ⊗ C^N for every basis operator X."""
    N = fam.N
    eye = np.eye(N, dtype=object)
    out = {}
    for name, m in basis.items():
        x12 = np.kron(m, eye)
        out[(name, "12")] = x12
        out[(name, "23")] = np.kron(eye, m)
        # conjugation by the flip of factors 2 and 3
        x13 = x12.reshape((N,) * 6).transpose(0, 2, 1, 3, 5, 4)
        out[(name, "13")] = np.ascontiguousarray(x13).reshape(N**3, N**3)
    return out


def _fits_int64(arrays: list[np.ndarray], factors: int, dim: int) -> bool:
    top = max((abs(int(x)) for a in arrays for x in a.flat), default=0)
    return dim ** (2 * (factors - 1)) * max(top, 1) ** factors < _INT64_HEADROOM


def _as_int64(arrays: dict, ok: bool) -> dict:
    return {k: (v.astype(np.int64) if ok else v) for k, v in arrays.items()}


def check_ybe(fam: RMatrixFamily) -> Verdict:
    """
    Verify R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v) as a polynomial identity.

    Both sides are multiplied by (u-v)(u-v-kappa)·u(u-kappa)·v(v-kappa), which
    turns every R into w(w-kappa)·I - (w-kappa)·P + w·Q, and compared monomial
    by monomial.

    Args:
        fam (RMatrixFamily): The R-matrix family.

    Returns:
        Verdict: PASS, or FAIL carrying the first differing monomial u^r v^s
        (as `r`, `s`), the operator entry and its values in the cleared form.
    """
    w = sympy.Symbol("w")
    kappa = to_sympy(fam.kappa)
    cleared = {"I": w**2 - kappa * w, "P": kappa - w, "Q": w}
    basis, scale = _integer_basis(fam)
    # each side is a product of three scaled operators
    cube = scale**3
    emb = _embeddings(fam, basis)
    dim = fam.N**3
    emb = _as_int64(emb, _fits_int64(list(emb.values()), 3, dim))

    lhs: dict[tuple[int, int], np.ndarray] = {}
    rhs: dict[tuple[int, int], np.ndarray] = {}
    for x, y, z in product(_BASIS, repeat=3):
        terms = bivariate_terms(cleared[x].subs(w, U - V) * cleared[y].subs(w, U) * cleared[z].subs(w, V))
        if not terms:
            continue
        left = (emb[(x, "12")] @ emb[(y, "13")] @ emb[(z, "23")]).astype(object)
        right = (emb[(z, "23")] @ emb[(y, "13")] @ emb[(x, "12")]).astype(object)
        for mono, c in terms.items():
            lhs[mono] = lhs.get(mono, 0) + left * c
            rhs[mono] = rhs.get(mono, 0) + right * c
    for mono in sorted(lhs):
        where = first_difference(lhs[mono], rhs[mono])
        if where is not None:
            row, col = where
            return Verdict(
                "rmatrix.yang_baxter",
                f"N={fam.N}",
                False,
                "polynomial",
                mono[0],
                mono[1],
                row,
                col,
                format_rational(lhs[mono][row, col] / cube),
                format_rational(rhs[mono][row, col] / cube),
                note=f"monomial u^{mono[0]} v^{mono[1]}",
            )
    return Verdict("rmatrix.yang_baxter", f"N={fam.N}", True, "polynomial", note=f"{len(lhs)} monomials")


def _cleared_at(fam: RMatrixFamily, w: Rational) -> OpMatrix:
    n2 = fam.N * fam.N
    return identity(n2) * (w * (w - fam.kappa)) - fam.P * (w - fam.kappa) + fam.Q * w


def ybe_at_point(fam: RMatrixFamily, u: RationalLike, v: RationalLike) -> bool:
    """
    Evaluate both sides of the Yang-Baxter equation at an exact point (u, v).

    Each R(w) is replaced by w(w - kappa)·R(w), which scales both sides by the
    same nonzero number away from the poles.
    """
    u, v = rational(u), rational(v)
    mats = {"a": _cleared_at(fam, u - v), "b": _cleared_at(fam, u), "c": _cleared_at(fam, v)}
    scale = 1
    for m in mats.values():
        for x in m.flat:
            scale = math.lcm(scale, int(x.denominator))
    ints = {k: np.vectorize(lambda x: int(x * scale), otypes=[object])(m) for k, m in mats.items()}
    emb = _embeddings(fam, ints)
    dim = fam.N**3
    emb = _as_int64(emb, _fits_int64(list(emb.values()), 3, dim))
    left = emb[("a", "12")] @ emb[("b", "13")] @ emb[("c", "23")]
    right = emb[("c", "23")] @ emb[("b", "13")] @ emb[("a", "12")]
    return bool(np.array_equal(left, right))


def sample_points(fam: RMatrixFamily, seed: int, count: int) -> list[tuple[Rational, Rational]]:
    """Seeded rational points (u, v) avoiding the poles of R(u-v), R(u), R(v)."""
    rng = np.random.default_rng(seed)
    poles = {rational(0), fam.kappa}
    out: list[tuple[Rational, Rational]] = []
    while len(out) < count:
        nums = rng.integers(-9, 10, size=2)
        dens = rng.integers(1, 6, size=2)
        u = rational(f"{int(nums[0])}/{int(dens[0])}")
        v = rational(f"{int(nums[1])}/{int(dens[1])}")
        if u in poles or v in poles or (u - v) in poles:
            continue
        out.append((u, v))
    return out


def check_ybe_points(fam: RMatrixFamily, seed: int = 0, count: int = 5) -> Verdict:
    """Random-point oracle for `check_ybe`."""
    for u, v in sample_points(fam, seed, count):
        if not ybe_at_point(fam, u, v):
            return Verdict(
                "rmatrix.yang_baxter_points",
                f"N={fam.N}",
                False,
                "points",
                note=f"differs at u={format_rational(u)}, v={format_rational(v)}",
            )
    return Verdict("rmatrix.yang_baxter_points", f"N={fam.N}", True, "points", note=f"{count} points, seed {seed}")


@dataclass(frozen=True)
class UnitarityScalar:
    verdict: Verdict
    scalar: RatFunc | None


def unitarity_scalar(fam: RMatrixFamily) -> UnitarityScalar:
    """
    Check that R(u)R(-u) = f(u)·I entrywise and report f.

    Returns:
        UnitarityScalar: The verdict and the scalar f(u) when it exists.
    """
    inv_u = RatFunc.inverse_linear(0)
    f = {"I": RatFunc.constant(1), "P": -inv_u, "Q": RatFunc.inverse_linear(fam.kappa)}
    g = {k: x.reflect() for k, x in f.items()}
    mats = {"I": identity(fam.N * fam.N), "P": fam.P, "Q": fam.Q}
    pairs = [(x, y, f[x] * g[y], mats[x] @ mats[y]) for x, y in product(_BASIS, repeat=2)]
    cache: dict[tuple[Rational, ...], RatFunc] = {}

    def entry(i: int, j: int) -> RatFunc:
        key = tuple(m[i, j] for *_, m in pairs)
        if key not in cache:
            acc = RatFunc.constant(0)
            for (_, _, h, _), c in zip(pairs, key):
                if c != 0:
                    acc = acc + h * c
            cache[key] = acc
        return cache[key]

    n2 = fam.N * fam.N
    scalar = entry(0, 0)
    identity_id, inst = "rmatrix.unitarity_scalar", f"N={fam.N}"
    for i in range(n2):
        for j in range(n2):
            value = entry(i, j)
            expected = scalar if i == j else RatFunc.constant(0)
            if value != expected:
                return UnitarityScalar(
                    Verdict(identity_id, inst, False, "rational", row=i, col=j, lhs=str(value), rhs=str(expected)),
                    None,
                )
    return UnitarityScalar(Verdict(identity_id, inst, True, "rational", note=f"R(u)R(-u) = ({scalar})·I"), scalar)
