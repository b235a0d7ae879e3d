from __future__ import annotations

from dataclasses import fields

from yangso3.catalog._relations import Relation, RelationEvaluator
from yangso3.catalog._verdict import Verdict, summarize
from yangso3.exact import TruncSeries, identity, series_compare, zeros
from yangso3.gauss._data import SERIES_NAMES, GaussData, gauss_decompose, reconstruct_T
from yangso3.gauss._relations import (
    E_FIRST_MODE,
    commutation_relations,
    lemma_relations,
    shift_relations,
    unitarity_relations,
)
from yangso3.rep import LABELS, RepT


def gauss_env(G: GaussData) -> dict[str, TruncSeries]:
    """The nine generators plus the constant series e^{(1)}_{-1,0}."""
    env = G.env()
    env[E_FIRST_MODE] = TruncSeries.constant(G.e_m10.coefficient(1), G.order)
    return env


def gauss_evaluator(G: GaussData) -> RelationEvaluator:
    return RelationEvaluator(gauss_env(G), G.order)


def _evaluate(
    relations: list[Relation], G: GaussData, evaluator: RelationEvaluator | None, oracle: bool, instance: str
) -> list[Verdict]:
    evaluator = evaluator or gauss_evaluator(G)
    out = []
    for rel in relations:
        v = evaluator.verify(rel, oracle)
        out.append(summarize(rel.identity, [v], instance))
    return out


def _pick(relations: list[Relation], *ids: str) -> list[Relation]:
    return [r for r in relations if r.identity in ids]


def check_reconstruction(T: RepT, G: GaussData, instance: str = "") -> Verdict:
    """F(u)K(u)E(u) reproduces T(u) coefficient for coefficient."""
    rebuilt = reconstruct_T(G)
    verdicts = [
        Verdict.from_comparison(
            "gauss.reconstruction", f"t{i:+d}{j:+d}", series_compare(rebuilt(i, j), T(i, j)), "exact"
        )
        for i in LABELS
        for j in LABELS
    ]
    return summarize("gauss.reconstruction", verdicts, instance)


def check_uniqueness(T: RepT, instance: str = "") -> Verdict:
    """
    Decomposing the reassembled product returns the same generators.

    Args:
        T (RepT): The representation.
        instance (str): Parameter label of the verdict.

    Returns:
        Verdict: PASS when decompose(reconstruct(G)) = G for G = decompose(T).
    """
    G = gauss_decompose(T)
    again = gauss_decompose(reconstruct_T(G))
    verdicts = [
        Verdict.from_comparison(
            "gauss.uniqueness",
            SERIES_NAMES[f.name],
            series_compare(getattr(again, f.name), getattr(G, f.name)),
            "exact",
        )
        for f in fields(G)
    ]
    return summarize("gauss.uniqueness", verdicts, instance)


def check_leading_terms(G: GaussData, instance: str = "") -> Verdict:
    """k_i = I + O(u^-1); e and f are O(u^-1)."""
    eye, zero = identity(G.dim), zeros(G.dim)
    verdicts = []
    for f in fields(G):
        s = getattr(G, f.name)
        lead = TruncSeries.constant(eye if f.name.startswith("k") else zero, 0)
        cmp = series_compare(s.truncate(0), lead)
        verdicts.append(Verdict.from_comparison("gauss.leading_terms", SERIES_NAMES[f.name], cmp, "exact"))
    return summarize("gauss.leading_terms", verdicts, instance)


def check_unitarity_consequences(
    G: GaussData, evaluator: RelationEvaluator | None = None, instance: str = ""
) -> list[Verdict]:
    """
    The four identities read off from T^{-1}(u) = T^t(u + 1/2):

        k_1^{-1}(u) = k_{-1}(u+1/2)
        -e_01(u)k_1^{-1}(u) = k_{-1}(u+1/2)e_{-1,0}(u+1/2)
        -k_1^{-1}(u)f_10(u) = f_{0,-1}(u+1/2)k_{-1}(u+1/2)
        k_0^{-1}(u) + e_01(u)k_1^{-1}(u)f_10(u)
            = k_0(u+1/2) + f_{0,-1}(u+1/2)k_{-1}(u+1/2)e_{-1,0}(u+1/2)
    """
    return _evaluate(unitarity_relations(), G, evaluator, False, instance)


def check_kminus1_relations(
    G: GaussData, evaluator: RelationEvaluator | None = None, oracle: bool = True, instance: str = ""
) -> list[Verdict]:
    """Commutation of k_{-1}(u) with k_{-1}(v), k_0(v), e_{-1,0}(v) and f_{0,-1}(v)."""
    rels = _pick(
        commutation_relations(),
        "gauss.kminus1_commute",
        "gauss.kminus1_k0_commute",
        "gauss.kminus1_e",
        "gauss.kminus1_f",
    )
    return _evaluate(rels, G, evaluator, oracle, instance)


def check_e_f_commutator(
    G: GaussData, evaluator: RelationEvaluator | None = None, oracle: bool = True, instance: str = ""
) -> Verdict:
    """(u - v)[e_{-1,0}(u), f_{0,-1}(v)] = k_{-1}^{-1}(u)k_0(u) - k_{-1}^{-1}(v)k_0(v)."""
    return _evaluate(_pick(commutation_relations(), "gauss.e_f_commutator"), G, evaluator, oracle, instance)[0]


def check_shift_relations(
    G: GaussData, evaluator: RelationEvaluator | None = None, instance: str = ""
) -> list[Verdict]:
    """e_01(u) = -e_{-1,0}(u-1/2) and f_10(u) = -f_{0,-1}(u-1/2)."""
    rels = _pick(shift_relations(), "gauss.e01_shift", "gauss.f10_shift")
    return _evaluate(rels, G, evaluator, False, instance)


def check_k0_factorization(
    G: GaussData, evaluator: RelationEvaluator | None = None, instance: str = ""
) -> list[Verdict]:
    """
    k_0(u) = k_{-1}(u)k_{-1}^{-1}(u+1/2), with its two restatements
    k_{-1}^{-1}(u)k_0(u) = k_{-1}^{-1}(u+1/2) and k_0(u)k_{-1}(u+1/2) = k_{-1}(u).
    """
    rels = _pick(shift_relations(), "gauss.k0_factor", "gauss.h_shift", "gauss.k0_triangle")
    return _evaluate(rels, G, evaluator, False, instance)


def check_h_anticommutators(
    G: GaussData, evaluator: RelationEvaluator | None = None, oracle: bool = True, instance: str = ""
) -> list[Verdict]:
    """[H(u), e(v)] and [H(u), f(v)] through anticommutators, H = k_{-1}^{-1}k_0."""
    rels = _pick(commutation_relations(), "gauss.h_e_anticommutator", "gauss.h_f_anticommutator")
    return _evaluate(rels, G, evaluator, oracle, instance)


def check_square_relations(
    G: GaussData, evaluator: RelationEvaluator | None = None, oracle: bool = True, instance: str = ""
) -> list[Verdict]:
    """[e(u), e(v)] = (e(u) - e(v))^2/(2(u - v)) and the f version with opposite sign."""
    rels = _pick(commutation_relations(), "gauss.e_square", "gauss.f_square")
    return _evaluate(rels, G, evaluator, oracle, instance)


def check_lemmas(
    G: GaussData, evaluator: RelationEvaluator | None = None, instance: str = ""
) -> list[Verdict]:
    """The five single-variable identities for e_{-1,1} and f_{1,-1}."""
    return _evaluate(lemma_relations(), G, evaluator, False, instance)


def check_relations(G: GaussData, oracle: bool = True, instance: str = "") -> list[Verdict]:
    """Every commutation, shift and lemma relation of the Gauss generators, sharing one evaluator."""
    evaluator = gauss_evaluator(G)
    return [
        *check_kminus1_relations(G, evaluator, oracle, instance),
        check_e_f_commutator(G, evaluator, oracle, instance),
        *check_shift_relations(G, evaluator, instance),
        *check_k0_factorization(G, evaluator, instance),
        *check_h_anticommutators(G, evaluator, oracle, instance),
        *check_square_relations(G, evaluator, oracle, instance),
        *check_lemmas(G, evaluator, instance),
    ]
