from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from yangso3.catalog import Verdict, catalog_entry


@dataclass(frozen=True)
class Record:
    """One flat report line: a verdict with its catalog anchor and parameters."""

    identity: str
    suite: str
    anchor: str
    parameters: str
    verdict: str
    method: str
    r: int | None = None
    s: int | None = None
    row: int | None = None
    col: int | None = None
    lhs: str | None = None
    rhs: str | None = None
    note: str = ""
    elapsed_ms: int | None = None

    @classmethod
    def from_verdict(cls, v: Verdict, elapsed_ms: int | None = None) -> Record:
        entry = catalog_entry(v.identity)
        return cls(
            v.identity,
            entry.suite,
            entry.anchor,
            v.instance,
            v.status,
            v.method,
            v.r,
            v.s,
            v.row,
            v.col,
            v.lhs,
            v.rhs,
            v.note,
            elapsed_ms,
        )

    @property
    def sort_key(self) -> tuple[str, str]:
        return self.identity, self.parameters

    def as_dict(self, timings: bool = False) -> dict[str, object]:
        out: dict[str, object] = {
            "identity": self.identity,
            "suite": self.suite,
            "anchor": self.anchor,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "method": self.method,
            "r": self.r,
            "s": self.s,
            "row": self.row,
            "col": self.col,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "note": self.note,
        }
        if timings:
            out["elapsed_ms"] = self.elapsed_ms
        return out


@dataclass
class VerificationReport:
    """
    Records of a run, kept sorted by identity id then parameters.

    Args:
        config (dict[str, object]): Flat view of the run configuration.
        records (list[Record]): The records; sorted on construction.
        timings (bool): Whether elapsed milliseconds are serialized.
    """

    config: dict[str, object]
    records: list[Record] = field(default_factory=list)
    timings: bool = False

    def __post_init__(self) -> None:
        self.records = sorted(self.records, key=lambda r: r.sort_key)

    def extend(self, records: Iterable[Record]) -> None:
        self.records = sorted([*self.records, *records], key=lambda r: r.sort_key)

    @property
    def summary(self) -> dict[str, int]:
        failed = sum(r.verdict == "FAIL" for r in self.records)
        skipped = sum(r.verdict == "SKIP" for r in self.records)
        return {
            "total": len(self.records),
            "passed": len(self.records) - failed - skipped,
            "failed": failed,
            "skipped": skipped,
        }

    @property
    def passed(self) -> bool:
        return self.summary["failed"] == 0

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def failures(self) -> list[Record]:
        return [r for r in self.records if r.verdict == "FAIL"]

    def as_dict(self) -> dict[str, object]:
        return {
            "config": self.config,
            "records": [r.as_dict(self.timings) for r in self.records],
            "summary": self.summary,
        }
