from __future__ import annotations

from dataclasses import fields

import pytest

from yangso3.gauss import (
    SERIES_NAMES,
    GaussData,
    check_leading_terms,
    check_reconstruction,
    check_uniqueness,
    factor_matrices,
    gauss_decompose,
    reconstruct_from_generators,
)
from yangso3.rep import RepT


@pytest.mark.parametrize("fixture", ["1", "2"])
def test_reconstruction(fixture: str, request: pytest.FixtureRequest) -> None:
    T: RepT = request.getfixturevalue(f"rep{fixture}")
    G: GaussData = request.getfixturevalue(f"gauss{fixture}")
    assert G.dim == T.dim
    assert check_reconstruction(T, G).passed
    assert check_uniqueness(T).passed
    assert check_leading_terms(G).passed


def test_factor_shapes(gauss1: GaussData) -> None:
    F, K, E = factor_matrices(gauss1)
    assert F(0, -1) is gauss1.f0_m1
    assert K(0, 0) is gauss1.k0
    assert E(-1, 0) is gauss1.e_m10
    assert F(1, 0) is gauss1.f10


def test_env_names(gauss1: GaussData) -> None:
    assert set(gauss1.env()) == set(SERIES_NAMES.values())
    assert gauss1.series("eM10") is gauss1.e_m10
    assert gauss1.series("e_m10") is gauss1.e_m10


@pytest.mark.parametrize("fixture", ["gauss1", "gauss2"])
def test_three_generators_suffice(fixture: str, request: pytest.FixtureRequest) -> None:
    G: GaussData = request.getfixturevalue(fixture)
    rebuilt = reconstruct_from_generators(G.k_minus1, G.e_m10, G.f0_m1)
    for f in fields(G):
        assert getattr(rebuilt, f.name).equals(getattr(G, f.name)), f.name


def test_perturbed_pivot_breaks_reconstruction(rep1: RepT, gauss1: GaussData) -> None:
    v = check_reconstruction(rep1, gauss1.with_perturbed("kMinus1", 1, 1))
    assert not v.passed
    assert v.r is not None and v.r >= 1
    assert v.row is not None and v.col is not None


def test_perturbed_constant_breaks_leading_terms(gauss1: GaussData) -> None:
    v = check_leading_terms(gauss1.with_perturbed("f10", 0, 1))
    assert not v.passed
    assert v.r == 0


def test_unknown_generator(gauss1: GaussData) -> None:
    with pytest.raises(ValueError):
        gauss1.with_perturbed("k2", 1, 1)


def test_decompose_needs_identity_pivot(rep1: RepT) -> None:
    with pytest.raises(ValueError):
        gauss_decompose(rep1.with_perturbed(-1, -1, 0, -1))
