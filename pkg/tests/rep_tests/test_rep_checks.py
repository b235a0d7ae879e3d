from __future__ import annotations

import pytest

from tests.conftest import ORDER
from yangso3.exact import HALF
from yangso3.gauss import check_relations, gauss_decompose
from yangso3.rep import (
    LABELS,
    EvalParams,
    RepT,
    build_rep,
    check_constant_term,
    check_gen_rel_t,
    check_gen_rel_tprime,
    check_inverse_is_transpose,
    check_normalization,
    check_rtt,
    check_unitarity,
    eval_rep_raw,
    invert_T,
    normalize_scalar,
    normalized_eval_rep,
    tensor_rep,
    transpose_T,
)


@pytest.mark.parametrize("fixture", ["rep1", "rep2"])
def test_defining_relations(fixture: str, request: pytest.FixtureRequest) -> None:
    T: RepT = request.getfixturevalue(fixture)
    assert check_constant_term(T).passed
    assert check_rtt(T, oracle=False).passed
    assert check_gen_rel_t(T, oracle=False).passed


def test_rtt_with_oracle(rep1: RepT) -> None:
    v = check_rtt(rep1, oracle=True, instance="a=1/3")
    assert v.passed, v
    assert v.instance == "a=1/3"
    assert v.note == "81 instances"


@pytest.mark.parametrize("fixture", ["rep1", "rep2"])
def test_inverse_relations(fixture: str, request: pytest.FixtureRequest) -> None:
    T: RepT = request.getfixturevalue(fixture)
    matrix, entrywise = check_gen_rel_tprime(T, invert_T(T), oracle=False)
    assert matrix.identity == "rtt.inverse_matrix"
    assert entrywise.identity == "rtt.inverse_generating"
    assert matrix.passed and entrywise.passed


def test_inverse_relations_accept_transpose(rep1: RepT) -> None:
    verdicts = check_gen_rel_tprime(rep1, transpose_T(rep1, HALF), oracle=False)
    assert all(v.passed for v in verdicts)


@pytest.mark.parametrize("fixture", ["rep1", "rep2"])
def test_unitarity(fixture: str, request: pytest.FixtureRequest) -> None:
    T: RepT = request.getfixturevalue(fixture)
    assert check_unitarity(T).passed
    assert check_inverse_is_transpose(T).passed


def test_raw_rep_not_unitary() -> None:
    v = check_unitarity(eval_rep_raw("1/3", ORDER))
    assert not v.passed
    assert v.r == 2


@pytest.mark.parametrize("a", ["0", "1/3", "-2/5"])
def test_normalization(a: str) -> None:
    assert check_normalization(normalize_scalar(a, ORDER)).passed


@pytest.mark.parametrize("r", [1, 2, 3])
def test_perturbed_normalization_fails_at_its_order(r: int) -> None:
    norm = normalize_scalar("1/3", ORDER).with_perturbed(r, 1)
    assert not check_normalization(norm).passed
    T = build_rep(EvalParams(("1/3",), ORDER), normalizers=[norm])
    v = check_unitarity(T)
    assert not v.passed
    assert v.r == r


def test_perturbed_entry_breaks_rtt(rep1: RepT) -> None:
    T = rep1.with_perturbed(-1, 0, 1, 1)
    v = check_rtt(T, oracle=False)
    assert not v.passed
    assert v.r is not None
    assert v.lhs != v.rhs


def test_perturbed_constant_term(rep1: RepT) -> None:
    T = rep1.with_perturbed(0, 1, 0, 1)
    v = check_constant_term(T)
    assert not v.passed
    assert v.r == 0
    assert not check_inverse_is_transpose(T).passed


def _outcomes(T: RepT) -> list[tuple[object, ...]]:
    verdicts = [
        check_constant_term(T),
        check_rtt(T, oracle=False),
        check_gen_rel_t(T, oracle=False),
        check_unitarity(T),
        *check_relations(gauss_decompose(T), oracle=False),
    ]
    return [(v.identity, v.status, v.r, v.s, v.note) for v in verdicts]


def test_point_order_does_not_change_verdicts(rep2: RepT) -> None:
    swapped = build_rep(EvalParams(("1/3", "0"), ORDER))
    assert _outcomes(swapped) == _outcomes(rep2)


def test_coproduct_is_coassociative() -> None:
    A, B, C = (normalized_eval_rep(a, 3) for a in ("0", "1/3", "-2/5"))
    left = tensor_rep(tensor_rep(A, B), C)
    right = tensor_rep(A, tensor_rep(B, C))
    assert left.dim == right.dim == 27
    for i in LABELS:
        for j in LABELS:
            assert left(i, j).equals(right(i, j)), (i, j)
