from yangso3.runner._cli import build_parser, emit_catalog, main
from yangso3.runner._report import Record, VerificationReport
from yangso3.runner._run import run
from yangso3.runner._suites import SUITES, SuiteContext

__all__ = [
    "Record",
    "SUITES",
    "SuiteContext",
    "VerificationReport",
    "build_parser",
    "emit_catalog",
    "main",
    "run",
]
