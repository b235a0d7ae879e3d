from __future__ import annotations

import json
from typing import TYPE_CHECKING, TextIO

if TYPE_CHECKING:
    from yangso3.runner import Record, VerificationReport


def render_json(report: VerificationReport) -> str:
    """
    Serialize a report as JSON.

    Args:
        report (VerificationReport): The report.

    Returns:
        str: `{"config": ..., "records": [...], "summary": ...}` with flat
        records, rationals as "p/q" strings and a trailing newline.
    """
    return json.dumps(report.as_dict(), indent=2, ensure_ascii=False) + "\n"


def _evidence(record: Record) -> str:
    if record.verdict != "FAIL" or record.row is None and record.r is None:
        return ""
    where = []
    if record.r is not None:
        where.append(f"r={record.r}")
    if record.s is not None:
        where.append(f"s={record.s}")
    if record.row is not None:
        where.append(f"entry=({record.row},{record.col})")
    return f" at {' '.join(where)}: lhs={record.lhs} rhs={record.rhs}"


def format_record(record: Record) -> str:
    line = f"{record.verdict:<4}  {record.identity:<34} [{record.parameters}] {record.method}"
    line += _evidence(record)
    if record.note:
        line += f"  ({record.note})"
    if record.elapsed_ms is not None:
        line += f"  {record.elapsed_ms} ms"
    return line


def render_text(report: VerificationReport) -> str:
    """One line per record followed by a summary line."""
    lines = [format_record(r) for r in report.records]
    s = report.summary
    lines.append(f"total={s['total']} passed={s['passed']} failed={s['failed']} skipped={s['skipped']}")
    return "\n".join(lines) + "\n"


def write_report(report: VerificationReport, fmt: str, stream: TextIO) -> None:
    """
    Write a report in the given format.

    Raises:
        ValueError: If the format is neither "json" nor "text".
    """
    if fmt == "json":
        stream.write(render_json(report))
    elif fmt == "text":
        stream.write(render_text(report))
    else:
        raise ValueError(f"Unknown report format: {fmt!r}")
