from __future__ import annotations

import gmpy2
import numpy as np
import pytest

from yangso3.exact import as_exact, equal, first_difference, from_rows, identity, is_zero, kron, scalar_value, unit, zeros


def test_identity_and_unit() -> None:
    assert equal(identity(2) - unit(2, 0, 0) - unit(2, 1, 1), zeros(2))
    assert is_zero(zeros(3))


def test_entries_stay_exact() -> None:
    m = from_rows([[1, "1/3"], [0, 2]])
    entry = (m @ m)[0, 1]
    assert entry == gmpy2.mpq(1, 1) * gmpy2.mpq(1, 3) + gmpy2.mpq(1, 3) * 2
    assert isinstance(entry, type(gmpy2.mpq(1)))


def test_from_rows_requires_square() -> None:
    with pytest.raises(ValueError, match="square"):
        from_rows([[1, 2]])


def test_kron_leftmost_most_significant() -> None:
    k = kron(unit(2, 0, 1), identity(3))
    assert k[0, 3] == 1
    assert k[3, 0] == 0


def test_first_difference() -> None:
    a = identity(3)
    b = a.copy()
    b[2, 1] = gmpy2.mpq(5)
    assert first_difference(a, b) == (2, 1)
    assert first_difference(a, a) is None
    with pytest.raises(ValueError, match="Shape mismatch"):
        first_difference(a, identity(2))


def test_scalar_value() -> None:
    assert scalar_value(identity(3) * gmpy2.mpq(2, 3)) == gmpy2.mpq(2, 3)
    assert scalar_value(unit(2, 0, 1)) is None


def test_as_exact() -> None:
    m = as_exact(np.array([[1, -2], [3, 4]], dtype=np.int64))
    assert m.dtype == object
    assert m[0, 1] == -2
