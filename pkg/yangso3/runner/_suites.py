from __future__ import annotations

import warnings
from collections.abc import Callable
from functools import cached_property

from yangso3._settings import Mutation, RunConfig
from yangso3.catalog import RelationEvaluator, Verdict, summarize
from yangso3.drinfeld import (
    CURRENT_NAMES,
    Currents,
    check_current_relations,
    check_full_roundtrip,
    check_inverse_map,
    check_mode_relations,
    check_mode_roundtrip,
    extract_modes,
    phi_map,
)
from yangso3.exact import HALF, format_rational
from yangso3.gauss import (
    GaussData,
    check_leading_terms,
    check_reconstruction,
    check_relations,
    check_uniqueness,
    check_unitarity_consequences,
    gauss_decompose,
)
from yangso3.rep import (
    EvalParams,
    NormScalar,
    RepT,
    build_rep,
    check_constant_term,
    check_gen_rel_t,
    check_gen_rel_tprime,
    check_inverse_is_transpose,
    check_normalization,
    check_rtt,
    check_unitarity,
    invert_T,
    normalize_scalar,
)
from yangso3.rmatrix import RMatrixFamily, build_R, check_structure, check_ybe, check_ybe_points, unitarity_scalar


class SuiteContext:
    """
    Objects shared by the suites of one run, built on first use.

    Every suite starts from the same unmutated representation; a mutation
    is applied to a copy handed only to the suite it names.
    """

    def __init__(self, run: RunConfig) -> None:
        self.run = run

    @property
    def label(self) -> str:
        return self.run.label

    def mutation(self, suite: str) -> Mutation | None:
        m = self.run.mutate
        return m if m is not None and m.suite == suite else None

    @cached_property
    def fam(self) -> RMatrixFamily:
        return build_R(3)

    @cached_property
    def params(self) -> EvalParams:
        return EvalParams(self.run.points, self.run.order)

    @cached_property
    def norms(self) -> list[NormScalar]:
        return [normalize_scalar(a, self.run.order, self.fam) for a in self.params.points]

    @cached_property
    def T(self) -> RepT:
        return build_rep(self.params, self.fam, self.norms)

    @cached_property
    def G(self) -> GaussData:
        return gauss_decompose(self.T)

    def rep_for(self, suite: str) -> RepT:
        m = self.mutation(suite)
        if m is None or m.target == "c":
            return self.T
        i, j = m.entry
        return self.T.with_perturbed(i, j, m.index, m.delta)

    def gauss_for(self, suite: str) -> GaussData:
        m = self.mutation(suite)
        if m is None or m.target in CURRENT_NAMES:
            return self.G
        return self.G.with_perturbed(m.target, m.index, m.delta)

    def currents_for(self, suite: str) -> Currents:
        C = phi_map(self.gauss_for(suite))
        m = self.mutation(suite)
        if m is not None and m.target in CURRENT_NAMES:
            C = C.with_perturbed(m.target, m.index, m.delta)
        return C


def run_rmatrix(ctx: SuiteContext) -> list[Verdict]:
    """Structure, Yang-Baxter and unitarity of R(u) for every configured N."""
    run, m = ctx.run, ctx.mutation("rmatrix")
    out: list[Verdict] = []
    for n, N in enumerate(run.sizes):
        fam = build_R(N)
        if m is not None and n == 0:
            fam = fam.with_perturbed(m.target, m.index, m.delta)
        out += check_structure(fam)
        out.append(check_ybe(fam))
        if run.sample_points > 0:
            out.append(check_ybe_points(fam, run.seed, run.sample_points))
        else:
            out.append(Verdict.skip("rmatrix.yang_baxter_points", f"N={N}", "no sample points requested"))
        out.append(unitarity_scalar(fam).verdict)
    return out


def run_rtt(ctx: SuiteContext) -> list[Verdict]:
    """RTT relation in matrix and entrywise form, for T(u) and T^{-1}(u)."""
    T, label, oracle = ctx.rep_for("rtt"), ctx.label, ctx.run.oracle
    evaluator = RelationEvaluator(T.env(), T.order)
    out = [
        check_constant_term(T, label),
        check_rtt(T, ctx.fam, evaluator, oracle, label),
        check_gen_rel_t(T, evaluator, oracle, label),
    ]
    try:
        Tinv = invert_T(T)
    except ValueError as e:
        warnings.warn(f"Inverse relations skipped: {e}", stacklevel=2)
        return out + [Verdict.skip(i, label, str(e)) for i in ("rtt.inverse_matrix", "rtt.inverse_generating")]
    return out + check_gen_rel_tprime(T, Tinv, ctx.fam, oracle, label)


def run_unitarity(ctx: SuiteContext) -> list[Verdict]:
    """T(u)T^t(u + 1/2) = 1, the inverse as a transpose and the scalar normalizations."""
    m, label = ctx.mutation("unitarity"), ctx.label
    norms = list(ctx.norms)
    if m is not None and m.target == "c":
        norms[0] = norms[0].with_perturbed(m.index, m.delta)
        T = build_rep(ctx.params, ctx.fam, norms)
    else:
        T = ctx.rep_for("unitarity")
    normalization = [check_normalization(n, f"a={format_rational(a)}") for a, n in zip(ctx.params.points, norms)]
    return [
        check_unitarity(T, HALF, label),
        check_inverse_is_transpose(T, HALF, label),
        summarize("unitarity.normalization", normalization, label),
    ]


def run_gauss(ctx: SuiteContext) -> list[Verdict]:
    """Gauss decomposition, its leading terms and the unitarity consequences."""
    G, label = ctx.gauss_for("gauss"), ctx.label
    return [
        check_reconstruction(ctx.T, G, label),
        check_leading_terms(G, label),
        *check_unitarity_consequences(G, None, label),
    ]


def run_relations(ctx: SuiteContext) -> list[Verdict]:
    return check_relations(ctx.gauss_for("relations"), ctx.run.oracle, ctx.label)


def run_drinfeld(ctx: SuiteContext) -> list[Verdict]:
    """Current relations, mode relations and the inverse of the isomorphism."""
    G, C, label = ctx.gauss_for("drinfeld"), ctx.currents_for("drinfeld"), ctx.label
    return [
        *check_current_relations(C, ctx.run.oracle, label),
        *check_mode_relations(extract_modes(C), ctx.run.mode_bound, label),
        *check_inverse_map(G, C, ctx.T, label),
    ]


def run_roundtrip(ctx: SuiteContext) -> list[Verdict]:
    G, label = ctx.gauss_for("roundtrip"), ctx.label
    return [
        check_uniqueness(ctx.T, label),
        check_mode_roundtrip(phi_map(G), label),
        check_full_roundtrip(ctx.T, G, label),
    ]


SUITES: dict[str, Callable[[SuiteContext], list[Verdict]]] = {
    "rmatrix": run_rmatrix,
    "rtt": run_rtt,
    "unitarity": run_unitarity,
    "gauss": run_gauss,
    "relations": run_relations,
    "drinfeld": run_drinfeld,
    "roundtrip": run_roundtrip,
}
