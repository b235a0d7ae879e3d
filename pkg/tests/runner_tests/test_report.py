from __future__ import annotations

import io
import json

import pytest

from yangso3.catalog import Verdict
from yangso3.runner import Record, VerificationReport
from yangso3.utils import format_record, render_json, render_text, write_report


def _report() -> VerificationReport:
    records = [
        Record.from_verdict(Verdict("rtt.matrix", "K=4 m=1 a=1/3", note="81 instances", method="clear")),
        Record.from_verdict(
            Verdict("rmatrix.flip_involution", "N=3", False, "exact", 0, None, 0, 0, "4", "1"), elapsed_ms=3
        ),
        Record.from_verdict(Verdict.skip("rmatrix.yang_baxter_points", "N=3", "no sample points requested")),
    ]
    return VerificationReport({"order": 4}, records)


def test_record_from_verdict() -> None:
    r = Record.from_verdict(Verdict("gauss.e01_shift", "x"))
    assert r.suite == "relations"
    assert r.anchor == r"e_{01}(u)=-e_{-1,0}(u-\frac{1}{2})"
    assert r.verdict == "PASS"
    with pytest.raises(KeyError):
        Record.from_verdict(Verdict("gauss.unknown"))


def test_records_sorted_and_summarized() -> None:
    report = _report()
    assert [r.identity for r in report.records] == [
        "rmatrix.flip_involution",
        "rmatrix.yang_baxter_points",
        "rtt.matrix",
    ]
    assert report.summary == {"total": 3, "passed": 1, "failed": 1, "skipped": 1}
    assert not report.passed
    assert report.exit_status == 1
    assert [r.identity for r in report.failures()] == ["rmatrix.flip_involution"]


def test_extend_keeps_order() -> None:
    report = VerificationReport({})
    assert report.exit_status == 0
    report.extend([Record.from_verdict(Verdict("rtt.matrix", "b")), Record.from_verdict(Verdict("rtt.matrix", "a"))])
    assert [r.parameters for r in report.records] == ["a", "b"]


def test_render_json() -> None:
    report = _report()
    data = json.loads(render_json(report))
    assert set(data) == {"config", "records", "summary"}
    failed = data["records"][0]
    assert failed["verdict"] == "FAIL"
    assert (failed["r"], failed["row"], failed["col"], failed["lhs"], failed["rhs"]) == (0, 0, 0, "4", "1")
    assert "elapsed_ms" not in failed
    report.timings = True
    assert json.loads(render_json(report))["records"][0]["elapsed_ms"] == 3


def test_render_text() -> None:
    lines = render_text(_report()).splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("FAIL  rmatrix.flip_involution")
    assert "at r=0 entry=(0,0): lhs=4 rhs=1" in lines[0]
    assert lines[1].startswith("SKIP")
    assert lines[-1] == "total=3 passed=1 failed=1 skipped=1"


def test_format_record_passed() -> None:
    line = format_record(Record.from_verdict(Verdict("rtt.matrix", "K=4", method="clear", note="81 instances")))
    assert line.startswith("PASS  rtt.matrix")
    assert line.endswith("[K=4] clear  (81 instances)")


def test_write_report() -> None:
    stream = io.StringIO()
    write_report(_report(), "text", stream)
    assert stream.getvalue().endswith("skipped=1\n")
    with pytest.raises(ValueError):
        write_report(_report(), "xml", io.StringIO())
