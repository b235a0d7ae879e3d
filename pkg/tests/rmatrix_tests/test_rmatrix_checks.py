from __future__ import annotations

import gmpy2
import pytest

from yangso3.rmatrix import (
    build_R,
    check_structure,
    check_ybe,
    check_ybe_points,
    sample_points,
    unitarity_scalar,
    ybe_at_point,
)


@pytest.mark.parametrize("N", [3, 4, 5])
def test_structure(N: int) -> None:
    verdicts = check_structure(build_R(N))
    assert {v.identity for v in verdicts} == {
        "rmatrix.flip_involution",
        "rmatrix.q_square",
        "rmatrix.pq_absorb",
        "rmatrix.qp_absorb",
        "rmatrix.q_partial_transpose",
    }
    assert all(v.passed for v in verdicts)
    assert all(v.instance == f"N={N}" for v in verdicts)


@pytest.mark.parametrize("N", [3, 4, 5])
def test_yang_baxter(N: int) -> None:
    v = check_ybe(build_R(N))
    assert v.passed, v
    assert v.method == "polynomial"


@pytest.mark.parametrize("N", [3, 4])
def test_yang_baxter_points(N: int) -> None:
    assert check_ybe_points(build_R(N), seed=0, count=4).passed


def test_ybe_at_point() -> None:
    fam = build_R(3)
    assert ybe_at_point(fam, 2, 5)
    assert ybe_at_point(fam, "-1/3", "7/2")


def test_sample_points_are_seeded_and_avoid_poles() -> None:
    fam = build_R(3)
    first = sample_points(fam, 7, 6)
    assert first == sample_points(fam, 7, 6)
    poles = {gmpy2.mpq(0), fam.kappa}
    assert all(u not in poles and v not in poles and u - v not in poles for u, v in first)


@pytest.mark.parametrize("N", [3, 4, 5])
def test_unitarity_scalar(N: int) -> None:
    result = unitarity_scalar(build_R(N))
    assert result.verdict.passed
    assert result.scalar is not None
    # R(u)R(-u) = (1 - 1/u^2)·I
    assert result.scalar.evaluate(2) == gmpy2.mpq(3, 4)
    assert result.scalar.evaluate(3) == gmpy2.mpq(8, 9)


def test_perturbed_flip_is_detected() -> None:
    fam = build_R(3).with_perturbed("P", 0, 1)
    verdicts = {v.identity: v for v in check_structure(fam)}
    flip = verdicts["rmatrix.flip_involution"]
    assert not flip.passed
    assert (flip.row, flip.col) == (0, 0)
    assert (flip.lhs, flip.rhs) == ("4", "1")
    assert not check_ybe(fam).passed


def test_ybe_failure_reports_cleared_entries() -> None:
    # only P⊗P⊗P reaches the constant monomial, with weight kappa^3 = 1/8
    v = check_ybe(build_R(3).with_perturbed("P", 1, "1/3"))
    assert not v.passed
    assert (v.r, v.s, v.row, v.col) == (0, 0, 0, 1)
    assert (v.lhs, v.rhs) == ("1/12", "1/24")
