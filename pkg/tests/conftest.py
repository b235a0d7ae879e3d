from __future__ import annotations

import pytest

from yangso3.drinfeld import Currents, phi_map
from yangso3.gauss import GaussData, gauss_decompose
from yangso3.rep import EvalParams, RepT, build_rep

ORDER = 4


@pytest.fixture(scope="session")
def rep1() -> RepT:
    """Normalized evaluation representation at 1/3 on C^3."""
    return build_rep(EvalParams(("1/3",), ORDER))


@pytest.fixture(scope="session")
def rep2() -> RepT:
    """Tensor product of the evaluation representations at 0 and 1/3."""
    return build_rep(EvalParams(("0", "1/3"), ORDER))


@pytest.fixture(scope="session")
def gauss1(rep1: RepT) -> GaussData:
    return gauss_decompose(rep1)


@pytest.fixture(scope="session")
def gauss2(rep2: RepT) -> GaussData:
    return gauss_decompose(rep2)


@pytest.fixture(scope="session")
def currents1(gauss1: GaussData) -> Currents:
    return phi_map(gauss1)


@pytest.fixture(scope="session")
def currents2(gauss2: GaussData) -> Currents:
    return phi_map(gauss2)
