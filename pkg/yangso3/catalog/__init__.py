from yangso3.catalog._entries import CATALOG, SUITES, CatalogEntry, catalog_entry, format_catalog, suite_entries
from yangso3.catalog._relations import (
    F,
    Factor,
    Relation,
    RelationEvaluator,
    Term,
    anticommutator,
    commutator,
    over,
    product_terms,
    scaled,
    term,
)
from yangso3.catalog._verdict import Verdict, summarize

__all__ = [
    "CATALOG",
    "CatalogEntry",
    "F",
    "Factor",
    "Relation",
    "RelationEvaluator",
    "SUITES",
    "Term",
    "Verdict",
    "anticommutator",
    "catalog_entry",
    "commutator",
    "format_catalog",
    "over",
    "product_terms",
    "scaled",
    "summarize",
    "term",
]
