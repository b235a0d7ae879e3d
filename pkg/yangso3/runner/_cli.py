from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from yangso3._settings import (
    ConfigurationError,
    build_run_config,
    configure_args,
    configure_defaults,
    configure_file,
    load_config,
)
from yangso3.catalog import format_catalog
from yangso3.runner._run import run
from yangso3.utils import write_report


def emit_catalog() -> str:
    """The identity catalog, one line per identity."""
    return format_catalog()


def build_parser() -> argparse.ArgumentParser:
    # Every override defaults to None so that only explicit flags win over
    # the configuration file.
    parser = argparse.ArgumentParser(
        prog="yangso3-verify",
        description="Exact verification of the Yangian Y(so_3) in finite-dimensional representations.",
    )
    parser.add_argument("-p", "--preset", type=str, default="default", help="configuration module name")
    parser.add_argument("-c", "--config", type=str, help="key=value configuration file")
    parser.add_argument("--catalog", action="store_true", help="print the identity catalog and exit")
    parser.add_argument("-s", "--suites", type=str, help="comma-separated suites, or all")
    parser.add_argument("-K", "--order", type=int, help="truncation order K")
    parser.add_argument("-m", "--depth", type=int, help="number of evaluation factors")
    parser.add_argument("--points", type=str, help="comma-separated evaluation points, e.g. 0,1/3")
    parser.add_argument("-f", "--format", type=str, choices=["json", "text"], help="report format")
    parser.add_argument("--mutate", type=str, help="suite:target:index:delta negative control")
    parser.add_argument("--seed", type=int, help="seed of sampled Yang-Baxter points")
    parser.add_argument("--mode-bound", dest="mode_bound", type=int, help="largest mode index checked")
    parser.add_argument("--sizes", type=str, help="comma-separated N for the R-matrix suite")
    parser.add_argument("--sample-points", dest="sample_points", type=int, help="sampled points per N")
    parser.add_argument(
        "--no-oracle", dest="no_oracle", action="store_true", default=None, help="skip the expansion oracle"
    )
    parser.add_argument("--timings", action="store_true", default=None, help="record elapsed milliseconds")
    parser.add_argument("-v", "--verbose", action="store_true", default=None, help="progress on standard error")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Command-line entry point.

    Returns:
        int: 0 when every identity passes, 1 on any failure, 2 on a
        configuration error.
    """
    args = build_parser().parse_args(argv)
    if args.catalog:
        sys.stdout.write(emit_catalog())
        return 0
    try:
        cfg = load_config(args.preset)
        if args.config:
            configure_file(cfg, args.config)
        configure_args(cfg, args)
        configure_defaults(cfg)
        config = build_run_config(cfg)
    except ConfigurationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report = run(config)
    write_report(report, config.format, sys.stdout)
    return report.exit_status
