from __future__ import annotations

import sys
import time

from tqdm import tqdm

from yangso3._settings import RunConfig
from yangso3.runner._report import Record, VerificationReport
from yangso3.runner._suites import SUITES, SuiteContext


def run(config: RunConfig, context: SuiteContext | None = None) -> VerificationReport:
    """
    Execute the selected suites in canonical order.

    Args:
        config (RunConfig): Validated run parameters.
        context (SuiteContext | None):
            Shared objects from an earlier run with the same parameters.

    Returns:
        VerificationReport: Sorted records of every identity checked.

    Notes:
        - Suites run one after another and share the representation and its
          Gauss decomposition; the report is identical across runs with the
          same configuration unless `config.timings` is set.
    """
    if config.verbose:
        print(f"Using suites: {', '.join(config.suites)}", file=sys.stderr)
        print(f"Parameters: {config.label}", file=sys.stderr)
        if config.mutate is not None:
            print(f"Mutation: {config.mutate}", file=sys.stderr)

    ctx = context if context is not None else SuiteContext(config)
    report = VerificationReport(config.as_dict(), timings=config.timings)
    pbar = tqdm(config.suites, desc="  [Verify]", disable=not config.verbose, file=sys.stderr)
    for suite in pbar:
        pbar.set_postfix_str(suite)
        start = time.perf_counter()
        verdicts = SUITES[suite](ctx)
        elapsed = int((time.perf_counter() - start) * 1000) if config.timings else None
        report.extend(Record.from_verdict(v, elapsed) for v in verdicts)
    return report
