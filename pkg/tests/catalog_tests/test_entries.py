from __future__ import annotations

import pytest

from yangso3.catalog import CATALOG, SUITES, catalog_entry, format_catalog, suite_entries
from yangso3.drinfeld import current_relations
from yangso3.gauss import commutation_relations, lemma_relations, shift_relations, unitarity_relations


def test_ids_unique() -> None:
    ids = [e.id for e in CATALOG]
    assert len(ids) == len(set(ids))


def test_every_entry_has_a_suite_and_anchor() -> None:
    for e in CATALOG:
        assert e.suite in SUITES
        assert e.anchor
        assert e.clearing
        assert e.id.split(".")[0] in {"rmatrix", "rtt", "unitarity", "gauss", "drinfeld"}


@pytest.mark.parametrize("suite", SUITES)
def test_every_suite_has_entries(suite: str) -> None:
    assert suite_entries(suite)


def test_relation_builders_are_catalogued() -> None:
    relations = [
        *unitarity_relations(),
        *commutation_relations(),
        *shift_relations(),
        *lemma_relations(),
        *current_relations(),
    ]
    for rel in relations:
        assert catalog_entry(rel.identity).id == rel.identity


def test_known_anchors() -> None:
    assert catalog_entry("gauss.e01_shift").anchor == r"e_{01}(u)=-e_{-1,0}(u-\frac{1}{2})"
    assert catalog_entry("drinfeld.modes_x_bracket").anchor == r"[x^+_k,x^-_l]=h_{k+l}"


def test_unknown_id() -> None:
    with pytest.raises(KeyError):
        catalog_entry("gauss.nonexistent")


def test_format_catalog() -> None:
    text = format_catalog()
    lines = text.splitlines()
    assert text.endswith("\n")
    assert len(lines) == len(CATALOG)
    assert all(line.startswith(e.id) for line, e in zip(lines, CATALOG))
    assert "clear[" in lines[0]
