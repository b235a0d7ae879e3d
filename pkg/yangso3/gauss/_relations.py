"""Relations among the Gauss generators, as catalog expressions."""

from __future__ import annotations

from dataclasses import replace

from yangso3.catalog._relations import (
    F,
    Factor,
    Relation,
    Term,
    anticommutator,
    commutator,
    over,
    product_terms,
    scaled,
    term,
)
from yangso3.exact import HALF, ZERO

E_FIRST_MODE = "eM10_1"

_k = F("kMinus1")
_k_inv = F("kMinus1", inverse=True)
_k0 = F("k0")
_e = F("eM10")
_f = F("f0M1")


def _v(f: Factor) -> Factor:
    return replace(f, var="v")


def _diff(name: str, sign: int = 1) -> tuple[Term, ...]:
    """sign·(x(u) - x(v))."""
    return (term(F(name, "u"), coeff=sign), term(F(name, "v"), coeff=-sign))


def unitarity_relations() -> list[Relation]:
    """The four consequences of T^t(u+1/2) = T^{-1}(u) for the Gauss generators."""
    k1_inv = F("k1", inverse=True)
    k_h = F("kMinus1", shift=HALF)
    e_h = F("eM10", shift=HALF)
    f_h = F("f0M1", shift=HALF)
    return [
        Relation("gauss.unitarity_k1", "", (term(k1_inv),), (term(k_h),)),
        Relation("gauss.unitarity_e01", "", (term(F("e01"), k1_inv, coeff=-1),), (term(k_h, e_h),)),
        Relation("gauss.unitarity_f10", "", (term(k1_inv, F("f10"), coeff=-1),), (term(f_h, k_h),)),
        Relation(
            "gauss.unitarity_k0",
            "",
            (term(F("k0", inverse=True)), term(F("e01"), k1_inv, F("f10"))),
            (term(F("k0", shift=HALF)), term(f_h, k_h, e_h)),
        ),
    ]


def commutation_relations() -> list[Relation]:
    """
    Two-variable relations among k_{-1}, k_0, e_{-1,0} and f_{0,-1}.

    Every relation is cleared by (u - v); the factor 1/2 of the anticommutator
    and square relations stays a term coefficient.
    """
    ku, kv = (term(_k),), (term(_v(_k)),)
    k0v = (term(_v(_k0)),)
    eu, ev = (term(_e),), (term(_v(_e)),)
    fv = (term(_v(_f)),)
    fu = (term(_f),)
    h_u = (term(_k_inv, _k0),)
    h_v = (term(_v(_k_inv), _v(_k0)),)
    e_diff, f_diff = _diff("eM10"), _diff("f0M1")
    return [
        Relation("gauss.kminus1_commute", "", commutator(ku, kv), (), (ZERO,)),
        Relation("gauss.kminus1_k0_commute", "", commutator(ku, k0v), (), (ZERO,)),
        Relation(
            "gauss.kminus1_e",
            "",
            commutator(ku, ev),
            over(product_terms(ku, _diff("eM10", -1)), 0),
        ),
        Relation(
            "gauss.kminus1_f",
            "",
            commutator(ku, fv),
            over(product_terms(f_diff, ku), 0),
        ),
        Relation(
            "gauss.e_f_commutator",
            "",
            commutator(eu, fv),
            over(h_u + tuple(-t for t in h_v), 0),
        ),
        Relation(
            "gauss.h_e_anticommutator",
            "",
            commutator(h_u, ev),
            over(scaled(anticommutator(h_u, e_diff), HALF), 0),
        ),
        Relation(
            "gauss.h_f_anticommutator",
            "",
            commutator(h_u, fv),
            over(scaled(anticommutator(h_u, f_diff), -HALF), 0),
        ),
        Relation(
            "gauss.e_square",
            "",
            commutator(eu, ev),
            over(scaled(product_terms(e_diff, e_diff), HALF), 0),
        ),
        Relation(
            "gauss.f_square",
            "",
            commutator(fu, fv),
            over(scaled(product_terms(f_diff, f_diff), -HALF), 0),
        ),
    ]


def shift_relations() -> list[Relation]:
    """Single-variable relations that trade k_0, e_01, f_10 for shifted k_{-1}, e_{-1,0}, f_{0,-1}."""
    k_h_inv = F("kMinus1", shift=HALF, inverse=True)
    return [
        Relation("gauss.e01_shift", "", (term(F("e01")),), (term(F("eM10", shift=-HALF), coeff=-1),)),
        Relation("gauss.f10_shift", "", (term(F("f10")),), (term(F("f0M1", shift=-HALF), coeff=-1),)),
        Relation("gauss.k0_factor", "", (term(_k0),), (term(_k, k_h_inv),)),
        Relation("gauss.h_shift", "", (term(_k_inv, _k0),), (term(k_h_inv),)),
        Relation("gauss.k0_triangle", "", (term(_k0, F("kMinus1", shift=HALF)),), (term(_k),)),
    ]


def lemma_relations() -> list[Relation]:
    """
    Relations expressing e_{-1,1} and f_{1,-1} through e_{-1,0} and f_{0,-1}.

    `E_FIRST_MODE` names the constant series e^{(1)}_{-1,0}.
    """
    e, e_h = _e, F("eM10", shift=HALF)
    e11, e11_h = F("eM11"), F("eM11", shift=HALF)
    e1 = F(E_FIRST_MODE)
    bracket = (term(e1, e), term(e, e1, coeff=-1))
    return [
        Relation(
            "gauss.e_m11_recursion",
            "",
            (term(e11_h, coeff=3), term(e11, coeff=-1), term(e_h, e, coeff=3), term(e, e, coeff=-2)),
            (),
        ),
        Relation("gauss.e_m11_bracket", "", (term(e11),), bracket + (term(e, e, coeff=-1),)),
        Relation(
            "gauss.e_first_mode_bracket",
            "",
            bracket,
            (term(e, e), term(e_h, e, coeff=-1), term(e11_h, coeff=-1)),
        ),
        Relation("gauss.e_m11_square", "", (term(e11),), (term(e, e, coeff=-HALF),)),
        Relation("gauss.f1_m1_square", "", (term(F("f1M1")),), (term(F("f0M1"), F("f0M1"), coeff=-HALF),)),
    ]
