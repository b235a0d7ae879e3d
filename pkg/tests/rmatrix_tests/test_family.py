from __future__ import annotations

import gmpy2
import pytest

from yangso3.exact import equal, identity
from yangso3.rmatrix import SoIndexing, build_P, build_Q, build_R, partial_transpose


@pytest.mark.parametrize("N, labels", [(3, (-1, 0, 1)), (4, (-2, -1, 1, 2)), (5, (-2, -1, 0, 1, 2))])
def test_indexing(N: int, labels: tuple[int, ...]) -> None:
    idx = SoIndexing(N)
    assert tuple(idx.labels) == labels
    assert [idx.position(i) for i in labels] == list(range(N))
    assert all(idx.label(idx.reverse(idx.position(i))) == -i for i in labels)


@pytest.mark.parametrize("N, kappa", [(3, gmpy2.mpq(1, 2)), (4, gmpy2.mpq(1)), (5, gmpy2.mpq(3, 2))])
def test_kappa(N: int, kappa: gmpy2.mpq) -> None:
    assert build_R(N).kappa == kappa


@pytest.mark.parametrize("N", [3, 4, 5])
def test_q_is_partial_transpose(N: int) -> None:
    assert equal(partial_transpose(build_P(N), N), build_Q(N))


def test_flip() -> None:
    P = build_P(3)
    assert equal(P @ P, identity(9))
    # P e_a ⊗ e_b = e_b ⊗ e_a
    assert P[1 * 3 + 2, 2 * 3 + 1] == 1


def test_r_entries() -> None:
    fam = build_R(3)
    # R(u)_{(0,0),(0,0)} = 1 - 1/u for so_3 (Q vanishes on this entry)
    assert fam.R[0, 0].evaluate(2) == gmpy2.mpq(1, 2)


def test_small_n_rejected() -> None:
    with pytest.raises(ValueError, match="N >= 3"):
        build_R(2)


def test_with_perturbed() -> None:
    fam = build_R(3)
    bumped = fam.with_perturbed("Q", 4, 1)
    assert bumped.Q.reshape(-1)[4] == fam.Q.reshape(-1)[4] + 1
    assert equal(bumped.P, fam.P)
    with pytest.raises(ValueError, match="Unknown R-matrix component"):
        fam.with_perturbed("R", 0, 1)
    with pytest.raises(ValueError, match="out of range"):
        fam.with_perturbed("P", 81, 1)
