from __future__ import annotations

from collections.abc import Iterable
from itertools import product

from yangso3.catalog._relations import F, Relation, RelationEvaluator, Term, term
from yangso3.catalog._verdict import Verdict, summarize
from yangso3.exact import HALF, ZERO, Rational, TruncSeries, series_compare, series_mul, series_shift
from yangso3.rep._build import NormScalar, invert_T, transpose_T, unitarity_products
from yangso3.rep._rept import LABELS, SO3, RepT, RepTInv, series_name
from yangso3.rmatrix import RMatrixFamily, build_R


def _t(i: int, j: int, var: str, prefix: str = "t") -> tuple:
    return (F(series_name(prefix, i, j), var),)  # type: ignore[arg-type]


def _instance(*labels: int) -> str:
    return ",".join(f"{x:+d}" for x in labels)


def _full_clearing(lhs: Iterable[Term], rhs: Iterable[Term], shifts: Iterable[Rational]) -> tuple[Rational, ...]:
    present = {c for t in (*lhs, *rhs) for c in t.poles}
    return tuple(c for c in shifts if c not in present)


def _r_entry_terms(fam: RMatrixFamily, row: int, col: int, factors: tuple) -> list[Term]:
    """R(u - v)_{row,col} times an ordered product, as I - P/(u-v) + Q/(u-v-kappa)."""
    out = []
    if row == col:
        out.append(term(*factors))
    if fam.P[row, col] != 0:
        out.append(term(*factors, coeff=-fam.P[row, col]).over(0))
    if fam.Q[row, col] != 0:
        out.append(term(*factors, coeff=fam.Q[row, col]).over(fam.kappa))
    return out


def rtt_relations(fam: RMatrixFamily | None = None) -> list[Relation]:
    """
    Entries ((i,k),(j,l)) of R(u-v)T_1(u)T_2(v) = T_2(v)T_1(u)R(u-v).

    Both sides are cleared by (u - v)(u - v - kappa) for every entry.
    """
    fam = fam or build_R(3)
    pos = SO3.position
    out = []
    for i, k, j, l in product(LABELS, repeat=4):
        row, col = pos(i) * 3 + pos(k), pos(j) * 3 + pos(l)
        lhs: list[Term] = []
        rhs: list[Term] = []
        for p, q in product(LABELS, repeat=2):
            mid = pos(p) * 3 + pos(q)
            lhs += _r_entry_terms(fam, row, mid, _t(p, j, "u") + _t(q, l, "v"))
            rhs += _r_entry_terms(fam, mid, col, _t(k, q, "v") + _t(i, p, "u"))
        extra = _full_clearing(lhs, rhs, (ZERO, fam.kappa))
        out.append(Relation("rtt.matrix", _instance(i, k, j, l), tuple(lhs), tuple(rhs), extra))
    return out


def generating_relations() -> list[Relation]:
    """
    The 81 entrywise relations

        [t_ij(u), t_kl(v)] = (t_kj(u)t_il(v) - t_kj(v)t_il(u))/(u - v)
            - (delta_{k,-i} sum_p t_pj(u)t_{-p,l}(v)
               - delta_{l,-j} sum_p t_{k,-p}(v)t_ip(u))/(u - v - 1/2).
    """
    out = []
    for i, j, k, l in product(LABELS, repeat=4):
        lhs = [term(*_t(i, j, "u"), *_t(k, l, "v")), term(*_t(k, l, "v"), *_t(i, j, "u"), coeff=-1)]
        rhs = [
            term(*_t(k, j, "u"), *_t(i, l, "v")).over(0),
            term(*_t(k, j, "v"), *_t(i, l, "u"), coeff=-1).over(0),
        ]
        if k == -i:
            rhs += [term(*_t(p, j, "u"), *_t(-p, l, "v"), coeff=-1).over(HALF) for p in LABELS]
        if l == -j:
            rhs += [term(*_t(k, -p, "v"), *_t(i, p, "u")).over(HALF) for p in LABELS]
        extra = _full_clearing(lhs, rhs, (ZERO, HALF))
        out.append(Relation("rtt.generating", _instance(i, j, k, l), tuple(lhs), tuple(rhs), extra))
    return out


def inverse_matrix_relations(fam: RMatrixFamily | None = None) -> list[Relation]:
    """Entries ((i,k),(j,l)) of T_2^{-1}(v)R(u-v)T_1(u) = T_1(u)R(u-v)T_2^{-1}(v)."""
    fam = fam or build_R(3)
    pos = SO3.position
    out = []
    for i, k, j, l in product(LABELS, repeat=4):
        lhs: list[Term] = []
        rhs: list[Term] = []
        for a, b in product(LABELS, repeat=2):
            # R_{(i,a),(b,l)} between t'_ka(v) and t_bj(u)
            lhs += _r_entry_terms(
                fam, pos(i) * 3 + pos(a), pos(b) * 3 + pos(l), _t(k, a, "v", "tp") + _t(b, j, "u")
            )
            # R_{(a,k),(j,b)} between t_ia(u) and t'_bl(v)
            rhs += _r_entry_terms(
                fam, pos(a) * 3 + pos(k), pos(j) * 3 + pos(b), _t(i, a, "u") + _t(b, l, "v", "tp")
            )
        extra = _full_clearing(lhs, rhs, (ZERO, fam.kappa))
        out.append(Relation("rtt.inverse_matrix", _instance(i, k, j, l), tuple(lhs), tuple(rhs), extra))
    return out


def inverse_generating_relations() -> list[Relation]:
    """
    The 81 entrywise relations between t_pq(u) and t'_rs(v)

        [t_pq(u), t'_rs(v)] = (t'_{r,-p}(v)t_{-s,q}(u) - t_{p,-r}(u)t'_{-q,s}(v))/(u - v - 1/2)
            + (delta_qr sum_i t_pi(u)t'_is(v) - delta_ps sum_i t'_ri(v)t_iq(u))/(u - v).
    """
    out = []
    for p, q, r, s in product(LABELS, repeat=4):
        lhs = [
            term(*_t(p, q, "u"), *_t(r, s, "v", "tp")),
            term(*_t(r, s, "v", "tp"), *_t(p, q, "u"), coeff=-1),
        ]
        rhs = [
            term(*_t(r, -p, "v", "tp"), *_t(-s, q, "u")).over(HALF),
            term(*_t(p, -r, "u"), *_t(-q, s, "v", "tp"), coeff=-1).over(HALF),
        ]
        if q == r:
            rhs += [term(*_t(p, i, "u"), *_t(i, s, "v", "tp")).over(0) for i in LABELS]
        if p == s:
            rhs += [term(*_t(r, i, "v", "tp"), *_t(i, q, "u"), coeff=-1).over(0) for i in LABELS]
        extra = _full_clearing(lhs, rhs, (ZERO, HALF))
        out.append(Relation("rtt.inverse_generating", _instance(p, q, r, s), tuple(lhs), tuple(rhs), extra))
    return out


def _run(
    identity_id: str, relations: list[Relation], evaluator: RelationEvaluator, oracle: bool, instance: str
) -> Verdict:
    return summarize(identity_id, [evaluator.verify(rel, oracle) for rel in relations], instance)


def check_rtt(
    T: RepT,
    fam: RMatrixFamily | None = None,
    evaluator: RelationEvaluator | None = None,
    oracle: bool = True,
    instance: str = "",
) -> Verdict:
    """
    Verify R(u-v)T_1(u)T_2(v) = T_2(v)T_1(u)R(u-v) entry by entry.

    Args:
        T (RepT): The representation.
        fam (RMatrixFamily | None): The R-matrix used in the relation.
        evaluator (RelationEvaluator | None):
            Evaluator over `T.env()`, shared with other checks to reuse products.
        oracle (bool): Confirm each entry with the expansion path. Defaults to True.
        instance (str): Parameter label of the aggregated verdict.

    Returns:
        Verdict: Aggregate over the 81 entries, carrying the first failing one.
    """
    evaluator = evaluator or RelationEvaluator(T.env(), T.order)
    return _run("rtt.matrix", rtt_relations(fam), evaluator, oracle, instance)


def check_gen_rel_t(
    T: RepT, evaluator: RelationEvaluator | None = None, oracle: bool = True, instance: str = ""
) -> Verdict:
    """Verify the 81 entrywise commutation relations of the t_ij(u)."""
    evaluator = evaluator or RelationEvaluator(T.env(), T.order)
    return _run("rtt.generating", generating_relations(), evaluator, oracle, instance)


def check_gen_rel_tprime(
    T: RepT,
    Tinv: RepT,
    fam: RMatrixFamily | None = None,
    oracle: bool = True,
    instance: str = "",
) -> list[Verdict]:
    """
    Verify the relations between T(u) and T^{-1}(v).

    Args:
        T (RepT): The representation.
        Tinv (RepT): Its inverse, from `invert_T` or `transpose_T(T, 1/2)`.
        fam (RMatrixFamily | None): The R-matrix of the matrix form.
        oracle (bool): Confirm each entry with the expansion path.
        instance (str): Parameter label of the aggregated verdicts.

    Returns:
        list[Verdict]: The matrix form and the 81 entrywise relations.
    """
    inv = Tinv if isinstance(Tinv, RepTInv) else RepTInv.from_positions(Tinv.entries)
    evaluator = RelationEvaluator({**T.env(), **inv.env()}, min(T.order, inv.order))
    return [
        _run("rtt.inverse_matrix", inverse_matrix_relations(fam), evaluator, oracle, instance),
        _run("rtt.inverse_generating", inverse_generating_relations(), evaluator, oracle, instance),
    ]


def _matrix_verdicts(identity_id: str, label: str, A: RepT, B: RepT) -> list[Verdict]:
    out = []
    for i, k in product(LABELS, repeat=2):
        cmp = series_compare(A(i, k), B(i, k))
        out.append(Verdict.from_comparison(identity_id, f"{label} {_instance(i, k)}", cmp, "exact"))
    return out


def check_constant_term(T: RepT, instance: str = "") -> Verdict:
    """t_ij^{(0)} = delta_ij·I."""
    lead = T.map(lambda s: s.truncate(0))
    verdicts = _matrix_verdicts("rtt.constant_term", "t", lead, RepT.identity(0, T.dim))
    return summarize("rtt.constant_term", verdicts, instance)


def check_unitarity(T: RepT, kappa: Rational = HALF, instance: str = "") -> Verdict:
    """
    Verify T(u)T^t(u + kappa) = T^t(u + kappa)T(u) = 1.

    Returns:
        Verdict: Aggregate over the 18 entries of both products.
    """
    left, right = unitarity_products(T, kappa)
    one = RepT.identity(T.order, T.dim)
    verdicts = _matrix_verdicts("unitarity.product", "T.Tt", left, one)
    verdicts += _matrix_verdicts("unitarity.product", "Tt.T", right, one)
    return summarize("unitarity.product", verdicts, instance)


def check_inverse_is_transpose(T: RepT, kappa: Rational = HALF, instance: str = "") -> Verdict:
    """T^{-1}(u) = T^t(u + kappa) coefficientwise."""
    try:
        inv = invert_T(T)
    except ValueError as e:
        return Verdict("unitarity.inverse_is_transpose", instance, False, note=str(e))
    verdicts = _matrix_verdicts("unitarity.inverse_is_transpose", "t", inv, transpose_T(T, kappa))
    return summarize("unitarity.inverse_is_transpose", verdicts, instance)


def check_normalization(norm: NormScalar, instance: str = "") -> Verdict:
    """c(u)c(u + kappa)g(u) = 1 through the validity order."""
    lhs = series_mul(series_mul(norm.c, series_shift(norm.c, norm.kappa)), norm.g)
    one = TruncSeries.one(lhs.valid)
    cmp = series_compare(lhs, one, 1)
    return Verdict.from_comparison("unitarity.normalization", instance, cmp, "exact")
