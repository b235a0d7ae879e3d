from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, replace

from yangso3.exact import Comparison, format_rational


@dataclass(frozen=True)
class Verdict:
    """
    Outcome of one identity instance.

    `r`/`s` are the exponents of u^{-r} v^{-s} (or polynomial degrees for
    identities checked as polynomials) and `row`/`col` the operator entry of
    the first difference; `lhs`/`rhs` are that entry on both sides, as "p/q".
    """

    identity: str
    instance: str = ""
    passed: bool = True
    method: str = "exact"
    r: int | None = None
    s: int | None = None
    row: int | None = None
    col: int | None = None
    lhs: str | None = None
    rhs: str | None = None
    note: str = ""
    skipped: bool = False

    @classmethod
    def from_comparison(cls, identity: str, instance: str, cmp: Comparison, method: str = "clear") -> Verdict:
        if cmp.passed and cmp.checked == 0:
            return cls(identity, instance, False, method, note="no jointly valid coefficients")
        if cmp.passed:
            return cls(identity, instance, True, method, note=f"{cmp.checked} coefficients")
        return cls(
            identity,
            instance,
            False,
            method,
            cmp.r,
            cmp.s,
            cmp.row,
            cmp.col,
            None if cmp.lhs_entry is None else format_rational(cmp.lhs_entry),
            None if cmp.rhs_entry is None else format_rational(cmp.rhs_entry),
        )

    @classmethod
    def skip(cls, identity: str, instance: str, reason: str) -> Verdict:
        return cls(identity, instance, True, "skip", note=reason, skipped=True)

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"

    def with_method(self, method: str) -> Verdict:
        return replace(self, method=method)


def summarize(identity: str, verdicts: Iterable[Verdict], instance: str = "") -> Verdict:
    """
    Fold the instances of one identity into a single verdict.

    The first failing instance in sorted instance order is kept as evidence.
    """
    ordered = sorted(verdicts, key=lambda v: v.instance)
    failed = [v for v in ordered if not v.passed]
    if failed:
        first = failed[0]
        return replace(
            first,
            identity=identity,
            instance=instance or first.instance,
            note=f"{len(failed)}/{len(ordered)} instances failed; first: {first.instance}",
        )
    checked = [v for v in ordered if not v.skipped]
    skipped = len(ordered) - len(checked)
    note = f"{len(checked)} instances"
    if skipped:
        note += f", {skipped} skipped"
    method = checked[0].method if checked else "skip"
    return Verdict(identity, instance, True, method, note=note, skipped=not checked and bool(ordered))
