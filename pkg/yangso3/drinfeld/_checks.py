from __future__ import annotations

from collections.abc import Iterator

from yangso3.catalog._relations import (
    F,
    Relation,
    RelationEvaluator,
    anticommutator,
    commutator,
    over,
    product_terms,
    scaled,
    term,
)
from yangso3.catalog._verdict import Verdict, summarize
from yangso3.drinfeld._currents import Currents, Modes, currents_from_modes, extract_modes, phi_map
from yangso3.exact import (
    HALF,
    ZERO,
    OpMatrix,
    TruncSeries,
    first_difference,
    format_rational,
    series_compare,
    series_mul,
    series_shift,
)
from yangso3.gauss import GaussData, reconstruct_from_generators, reconstruct_T
from yangso3.rep import LABELS, RepT


def current_relations() -> list[Relation]:
    """
    The six relations of the currents, each cleared by (u - v):

        [H(u), H(v)] = 0
        [X^+(u), X^-(v)] = -(H(u) - H(v))/(u - v)
        [H(u), X^±(v)] = ∓{H(u), X^±(u) - X^±(v)}/(2(u - v))
        [X^±(u), X^±(v)] = ∓(X^±(u) - X^±(v))^2/(2(u - v))
    """
    hu, hv = (term(F("H")),), (term(F("H", "v")),)
    h_diff = (term(F("H")), term(F("H", "v"), coeff=-1))
    out = [
        Relation("drinfeld.h_commute", "", commutator(hu, hv), (), (ZERO,)),
        Relation(
            "drinfeld.xplus_xminus",
            "",
            commutator((term(F("Xplus")),), (term(F("Xminus", "v")),)),
            over(scaled(h_diff, -1), 0),
        ),
    ]
    for name, tag, sign in (("Xplus", "xplus", -1), ("Xminus", "xminus", 1)):
        xu, xv = (term(F(name)),), (term(F(name, "v")),)
        x_diff = (*xu, term(F(name, "v"), coeff=-1))
        half = sign * HALF
        out.append(
            Relation(f"drinfeld.h_{tag}", "", commutator(hu, xv), over(scaled(anticommutator(hu, x_diff), half), 0))
        )
        out.append(
            Relation(
                f"drinfeld.{tag}_square", "", commutator(xu, xv), over(scaled(product_terms(x_diff, x_diff), half), 0)
            )
        )
    return sorted(out, key=lambda r: r.identity)


def check_current_relations(C: Currents, oracle: bool = True, instance: str = "") -> list[Verdict]:
    """
    Verify the six current relations in cleared form.

    Args:
        C (Currents): The currents of a representation.
        oracle (bool): Confirm each relation with the expansion path.
        instance (str): Parameter label of the verdicts.

    Returns:
        list[Verdict]: One verdict per relation, sorted by identity.
    """
    evaluator = RelationEvaluator(C.env(), C.order)
    return [summarize(rel.identity, [evaluator.verify(rel, oracle)], instance) for rel in current_relations()]


def _bracket(a: OpMatrix, b: OpMatrix) -> OpMatrix:
    return a @ b - b @ a


def _anti(a: OpMatrix, b: OpMatrix) -> OpMatrix:
    return a @ b + b @ a


def _mode_verdict(identity_id: str, instance: str, k: int, l: int, lhs: OpMatrix, rhs: OpMatrix) -> Verdict:
    where = first_difference(lhs, rhs)
    if where is None:
        return Verdict(identity_id, instance, True, "modes", k, l)
    row, col = where
    return Verdict(
        identity_id,
        instance,
        False,
        "modes",
        k,
        l,
        row,
        col,
        format_rational(lhs[row, col]),
        format_rational(rhs[row, col]),
    )


def _pairs(bound: int) -> Iterator[tuple[int, int]]:
    for k in range(bound + 1):
        for l in range(bound + 1):
            yield k, l


def _sign_label(sign: int) -> str:
    return "+" if sign > 0 else "-"


def check_mode_relations(M: Modes, bound: int, instance: str = "") -> list[Verdict]:
    """
    Verify the defining relations of the modes for every index pair whose
    referenced modes all have index at most `bound`.

        [h_k, h_l] = 0
        [x^+_k, x^-_l] = h_{k+l}
        [h_0, x^±_l] = ±x^±_l
        [h_{k+1}, x^±_l] - [h_k, x^±_{l+1}] = ±{h_k, x^±_l}/2
        [x^±_{k+1}, x^±_l] - [x^±_k, x^±_{l+1}] = ±{x^±_k, x^±_l}/2

    Args:
        M (Modes): Modes extracted from the currents.
        bound (int): Largest mode index referenced.
        instance (str): Parameter label of the verdicts.

    Returns:
        list[Verdict]: One aggregated verdict per relation family.

    Raises:
        ValueError: If `bound` exceeds the validity of the modes.
    """
    if bound < 0 or bound > M.count - 2:
        raise ValueError(f"Mode bound {bound} outside [0, {M.count - 2}] for {M.count} valid modes")
    h = M.h
    families: dict[str, list[Verdict]] = {
        "drinfeld.modes_h_commute": [],
        "drinfeld.modes_x_bracket": [],
        "drinfeld.modes_h0_x": [],
        "drinfeld.modes_h_x_recursion": [],
        "drinfeld.modes_x_recursion": [],
    }
    for k, l in _pairs(bound):
        tag = f"k={k:02d} l={l:02d}"
        families["drinfeld.modes_h_commute"].append(
            _mode_verdict("drinfeld.modes_h_commute", tag, k, l, _bracket(h[k], h[l]), h[k] * 0)
        )
        if k + l <= bound:
            families["drinfeld.modes_x_bracket"].append(
                _mode_verdict("drinfeld.modes_x_bracket", tag, k, l, _bracket(M.x_plus[k], M.x_minus[l]), h[k + l])
            )
    for sign in (1, -1):
        x, s = M.x(sign), _sign_label(sign)
        for l in range(bound + 1):
            families["drinfeld.modes_h0_x"].append(
                _mode_verdict("drinfeld.modes_h0_x", f"{s} l={l:02d}", 0, l, _bracket(h[0], x[l]), x[l] * sign)
            )
        for k, l in _pairs(bound - 1):
            tag = f"{s} k={k:02d} l={l:02d}"
            lhs = _bracket(h[k + 1], x[l]) - _bracket(h[k], x[l + 1])
            families["drinfeld.modes_h_x_recursion"].append(
                _mode_verdict("drinfeld.modes_h_x_recursion", tag, k, l, lhs, _anti(h[k], x[l]) * (sign * HALF))
            )
            lhs = _bracket(x[k + 1], x[l]) - _bracket(x[k], x[l + 1])
            families["drinfeld.modes_x_recursion"].append(
                _mode_verdict("drinfeld.modes_x_recursion", tag, k, l, lhs, _anti(x[k], x[l]) * (sign * HALF))
            )
    return [summarize(name, verdicts, instance) for name, verdicts in sorted(families.items())]


def check_inverse_map(
    G: GaussData, C: Currents, T: RepT | None = None, instance: str = ""
) -> list[Verdict]:
    """
    Verify k_{-1}(u) = H^{-1}(u - 1/2) and rebuild T from k_{-1}, X^- and X^+.

    Args:
        G (GaussData): Gauss generators of T.
        C (Currents): `phi_map(G)`.
        T (RepT | None): The representation; reassembled from `G` when omitted.
        instance (str): Parameter label of the verdicts.

    Returns:
        list[Verdict]: The inverse-map identity and the reconstruction of T.
    """
    product = series_mul(G.k_minus1, series_shift(C.H, -HALF))
    one = TruncSeries.one(product.valid, G.dim)
    inverse = Verdict.from_comparison("drinfeld.inverse_map", instance, series_compare(product, one), "exact")
    return [inverse, check_surjectivity(G.k_minus1, C, T if T is not None else reconstruct_T(G), instance)]


def check_surjectivity(k_minus1: TruncSeries, C: Currents, T: RepT, instance: str = "") -> Verdict:
    """T(u) is recovered from k_{-1}(u), X^-(u) = e_{-1,0}(u) and X^+(u) = f_{0,-1}(u) alone."""
    rebuilt = reconstruct_T(reconstruct_from_generators(k_minus1, C.Xminus, C.Xplus))
    verdicts = [
        Verdict.from_comparison(
            "drinfeld.surjectivity", f"t{i:+d}{j:+d}", series_compare(rebuilt(i, j), T(i, j)), "exact"
        )
        for i in LABELS
        for j in LABELS
    ]
    return summarize("drinfeld.surjectivity", verdicts, instance)


def check_mode_roundtrip(C: Currents, instance: str = "") -> Verdict:
    """Resumming the extracted modes reproduces every current."""
    again = currents_from_modes(extract_modes(C), C.dim)
    verdicts = [
        Verdict.from_comparison(
            "drinfeld.mode_roundtrip", name, series_compare(getattr(again, name), getattr(C, name)), "exact"
        )
        for name in ("H", "Xminus", "Xplus")
    ]
    return summarize("drinfeld.mode_roundtrip", verdicts, instance)


def check_full_roundtrip(T: RepT, G: GaussData, instance: str = "") -> Verdict:
    """
    T -> Gauss generators -> currents -> modes -> currents -> T.

    The return leg uses only k_{-1}(u) and the resummed X^±(u).
    """
    again = currents_from_modes(extract_modes(phi_map(G)), G.dim)
    rebuilt = reconstruct_T(reconstruct_from_generators(G.k_minus1, again.Xminus, again.Xplus))
    verdicts = [
        Verdict.from_comparison(
            "drinfeld.full_roundtrip", f"t{i:+d}{j:+d}", series_compare(rebuilt(i, j), T(i, j)), "exact"
        )
        for i in LABELS
        for j in LABELS
    ]
    return summarize("drinfeld.full_roundtrip", verdicts, instance)
