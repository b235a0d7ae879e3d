from __future__ import annotations

from collections import Counter

import pytest

from yangso3.catalog import (
    F,
    Relation,
    RelationEvaluator,
    Verdict,
    commutator,
    over,
    summarize,
    term,
)
from yangso3.drinfeld import Currents, current_relations
from yangso3.exact import Comparison, TruncSeries, identity, parse_rational, rational
from yangso3.gauss import GaussData, commutation_relations, gauss_evaluator


def test_clearing_multiset() -> None:
    rel = Relation(
        "x",
        "",
        over((term(F("a")),), 0, 1),
        over((term(F("a", "v")),), 0),
        (parse_rational("1/2"),),
    )
    assert rel.two_variable
    assert rel.clearing() == Counter({rational(0): 1, rational(1): 1, parse_rational("1/2"): 1})


def test_single_variable_relation() -> None:
    rel = Relation("x", "", (term(F("a")),), (term(F("a", shift="1/2")),))
    assert not rel.two_variable
    assert rel.clearing() == Counter()


def test_commutator_terms() -> None:
    terms = commutator((term(F("a")),), (term(F("b", "v")),))
    assert [t.coeff for t in terms] == [1, -1]
    assert terms[1].factors == (F("b", "v"), F("a"))


def test_evaluator_requires_series() -> None:
    with pytest.raises(ValueError):
        RelationEvaluator({}, 2)


def test_unknown_method(currents1: Currents) -> None:
    evaluator = RelationEvaluator(currents1.env(), currents1.order)
    with pytest.raises(NotImplementedError):
        evaluator.evaluate(current_relations()[0], "numeric")  # type: ignore[arg-type]


def test_clear_and_expand_agree(gauss1: GaussData) -> None:
    evaluator = gauss_evaluator(gauss1)
    for rel in commutation_relations():
        cleared = evaluator.evaluate(rel, "clear")
        expanded = evaluator.evaluate(rel, "expand")
        assert cleared.passed and expanded.passed, rel.identity
        assert (cleared.method, expanded.method) == ("clear", "expand")


def test_clear_and_expand_agree_on_failure(gauss1: GaussData) -> None:
    evaluator = gauss_evaluator(gauss1.with_perturbed("k0", 1, 1))
    rel = next(r for r in commutation_relations() if r.identity == "gauss.e_f_commutator")
    assert not evaluator.evaluate(rel, "clear").passed
    assert not evaluator.evaluate(rel, "expand").passed
    v = evaluator.verify(rel)
    assert not v.passed
    assert v.method == "clear"


def test_constant_relation_passes() -> None:
    one = TruncSeries.one(3, 2)
    evaluator = RelationEvaluator({"a": one}, 3)
    rel = Relation("x", "", (term(F("a"), F("a", "v")),), (term(F("a", "v"), F("a")),))
    assert evaluator.verify(rel).passed
    assert evaluator.dim == 2
    assert evaluator.series("a").equals(one)


def test_empty_window_fails() -> None:
    v = Verdict.from_comparison("x", "i", Comparison(True, 0))
    assert not v.passed
    assert v.note == "no jointly valid coefficients"


def test_failed_comparison_formats_entries() -> None:
    lhs, rhs = identity(2), identity(2) * 0
    v = Verdict.from_comparison("x", "i", Comparison(False, 3, 1, 0, 0, 0, lhs, rhs), "exact")
    assert v.status == "FAIL"
    assert (v.r, v.s, v.row, v.col) == (1, 0, 0, 0)
    assert (v.lhs, v.rhs) == ("1", "0")


def test_summarize_keeps_first_failure() -> None:
    verdicts = [
        Verdict("x", "b", False, r=2),
        Verdict("x", "c", True),
        Verdict("x", "a", False, r=5),
    ]
    v = summarize("x", verdicts, "K=4")
    assert not v.passed
    assert v.r == 5
    assert v.instance == "K=4"
    assert v.note == "2/3 instances failed; first: a"


def test_summarize_passes_and_skips() -> None:
    v = summarize("x", [Verdict("x", "a"), Verdict.skip("x", "b", "nothing to do")])
    assert v.passed and not v.skipped
    assert v.note == "1 instances, 1 skipped"
    only_skipped = summarize("x", [Verdict.skip("x", "b", "nothing to do")])
    assert only_skipped.skipped
    assert only_skipped.status == "SKIP"
