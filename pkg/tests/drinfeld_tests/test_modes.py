from __future__ import annotations

import pytest

from tests.conftest import ORDER
from yangso3.drinfeld import (
    Currents,
    check_current_relations,
    check_full_roundtrip,
    check_inverse_map,
    check_mode_relations,
    check_mode_roundtrip,
    extract_modes,
    phi_map,
)
from yangso3.gauss import GaussData
from yangso3.rep import RepT

MODE_FAMILIES = [
    "drinfeld.modes_h0_x",
    "drinfeld.modes_h_commute",
    "drinfeld.modes_h_x_recursion",
    "drinfeld.modes_x_bracket",
    "drinfeld.modes_x_recursion",
]


@pytest.mark.parametrize("fixture", ["currents1", "currents2"])
@pytest.mark.parametrize("bound", [0, 1, ORDER - 2])
def test_mode_relations(fixture: str, bound: int, request: pytest.FixtureRequest) -> None:
    C: Currents = request.getfixturevalue(fixture)
    verdicts = check_mode_relations(extract_modes(C), bound)
    assert [v.identity for v in verdicts] == MODE_FAMILIES
    assert all(v.passed for v in verdicts), [v for v in verdicts if not v.passed]


def test_mode_bound_limited_by_order(currents1: Currents) -> None:
    with pytest.raises(ValueError):
        check_mode_relations(extract_modes(currents1), ORDER - 1)
    with pytest.raises(ValueError):
        check_mode_relations(extract_modes(currents1), -1)


def test_perturbed_mode_breaks_bracket(currents1: Currents) -> None:
    M = extract_modes(currents1.with_perturbed("Xplus", 1, 1))
    verdicts = {v.identity: v for v in check_mode_relations(M, ORDER - 2)}
    assert verdicts["drinfeld.modes_h_commute"].passed
    broken = verdicts["drinfeld.modes_x_bracket"]
    assert not broken.passed
    assert (broken.r, broken.s) == (0, 0)
    assert broken.method == "modes"


@pytest.mark.parametrize("fixture", ["1", "2"])
def test_inverse_map(fixture: str, request: pytest.FixtureRequest) -> None:
    T: RepT = request.getfixturevalue(f"rep{fixture}")
    G: GaussData = request.getfixturevalue(f"gauss{fixture}")
    C: Currents = request.getfixturevalue(f"currents{fixture}")
    inverse, surjective = check_inverse_map(G, C, T)
    assert inverse.identity == "drinfeld.inverse_map"
    assert surjective.identity == "drinfeld.surjectivity"
    assert inverse.passed and surjective.passed
    assert all(v.passed for v in check_inverse_map(G, C))


@pytest.mark.parametrize("fixture", ["1", "2"])
def test_roundtrips(fixture: str, request: pytest.FixtureRequest) -> None:
    T: RepT = request.getfixturevalue(f"rep{fixture}")
    G: GaussData = request.getfixturevalue(f"gauss{fixture}")
    assert check_mode_roundtrip(phi_map(G)).passed
    assert check_full_roundtrip(T, G).passed


def test_perturbed_pivot_breaks_full_roundtrip(rep1: RepT, gauss1: GaussData) -> None:
    v = check_full_roundtrip(rep1, gauss1.with_perturbed("kMinus1", 2, 1))
    assert not v.passed
    assert v.identity == "drinfeld.full_roundtrip"


def test_perturbed_current_breaks_surjectivity(rep1: RepT, gauss1: GaussData, currents1: Currents) -> None:
    inverse, surjective = check_inverse_map(gauss1, currents1.with_perturbed("Xminus", 1, 1), rep1)
    assert inverse.passed
    assert not surjective.passed


@pytest.mark.parametrize("target", [None, "Xplus", "Xminus", "H"])
def test_modes_and_currents_fail_together(currents1: Currents, target: str | None) -> None:
    C = currents1 if target is None else currents1.with_perturbed(target, 1, 1)
    currents_ok = all(v.passed for v in check_current_relations(C, oracle=False))
    modes_ok = all(v.passed for v in check_mode_relations(extract_modes(C), ORDER - 2))
    assert currents_ok == modes_ok == (target is None)
