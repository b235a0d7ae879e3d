from yangso3.utils._format import format_record, render_json, render_text, write_report

__all__ = [
    "format_record",
    "render_json",
    "render_text",
    "write_report",
]
