from __future__ import annotations

from pathlib import Path

import pytest

from yangso3._settings import (
    SUITE_ORDER,
    ConfigurationError,
    Mutation,
    RunConfig,
    build_run_config,
    configure_args,
    configure_defaults,
    configure_file,
    configure_overrides,
    load_config,
    resolve_suites,
)
from yangso3.exact import parse_rational
from yangso3.runner import build_parser


def _build(name: str = "quick", **overrides: object) -> RunConfig:
    cfg = load_config(name)
    configure_overrides(cfg, overrides)
    configure_defaults(cfg)
    return build_run_config(cfg)


def test_mutation_parse() -> None:
    m = Mutation.parse("gauss:kMinus1:1:+1")
    assert (m.suite, m.target, m.index) == ("gauss", "kMinus1", 1)
    assert m.delta == 1
    assert str(m) == "gauss:kMinus1:1:1"
    assert str(Mutation.parse("unitarity:c:2:-1/3")) == "unitarity:c:2:-1/3"


def test_mutation_entry() -> None:
    assert Mutation.parse("rtt:t-10:1:1").entry == (-1, 0)
    assert Mutation.parse("rtt:t11:0:2").entry == (1, 1)
    with pytest.raises(ValueError):
        _ = Mutation.parse("gauss:k0:1:1").entry


@pytest.mark.parametrize(
    "text",
    [
        "gauss:kMinus1:1",
        "gauss:kMinus1:1:1:1",
        "nothing:kMinus1:1:1",
        "rtt:kMinus1:1:1",
        "rmatrix:R:0:1",
        "gauss:kMinus1:x:1",
        "gauss:kMinus1:-1:1",
        "gauss:kMinus1:1:0",
        "gauss:kMinus1:1:half",
    ],
)
def test_mutation_rejects(text: str) -> None:
    with pytest.raises(ValueError):
        Mutation.parse(text)


def test_load_config_copies() -> None:
    cfg = load_config("quick")
    cfg.rmatrix.sizes.append(7)
    assert load_config("quick").rmatrix.sizes == [3]
    assert cfg.config_name == "quick"


def test_unknown_config() -> None:
    with pytest.raises(ConfigurationError):
        load_config("missing")


def test_quick_config() -> None:
    run = _build()
    assert run.order == 4
    assert run.points == (parse_rational("1/3"),)
    assert run.suites == SUITE_ORDER
    assert run.label == "K=4 m=1 a=1/3"
    assert run.as_dict()["points"] == ["1/3"]


def test_default_points() -> None:
    cfg = load_config("quick")
    cfg.points = None
    cfg.depth = 3
    configure_defaults(cfg)
    assert cfg.points == ["0", "1/3", "2/3"]


def test_resolve_suites() -> None:
    assert resolve_suites(["roundtrip", "rmatrix"]) == ("rmatrix", "roundtrip")
    assert resolve_suites(["section3"]) == ("relations",)
    assert resolve_suites(["all", "rtt"]) == SUITE_ORDER
    with pytest.raises(ConfigurationError):
        resolve_suites(["everything"])
    with pytest.raises(ConfigurationError):
        resolve_suites([])


@pytest.mark.parametrize(
    "overrides",
    [
        {"order": 1},
        {"depth": 0},
        {"depth": 2},
        {"points": "1/0"},
        {"points": "x"},
        {"suites": "rmatrix,bogus"},
        {"format": "xml"},
        {"sizes": "2"},
        {"sample_points": -1},
        {"mode_bound": 3},
        {"mutate": "gauss:kMinus1:5:1"},
        {"mutate": "gauss:kMinus1:1:1", "suites": "rtt"},
        {"mutate": "rmatrix:P:81:1"},
        {"order": "four"},
        {"verbose": "maybe"},
    ],
)
def test_invalid_configuration(overrides: dict[str, object]) -> None:
    with pytest.raises(ConfigurationError):
        _build(**overrides)


def test_mode_bound_checked_only_with_drinfeld() -> None:
    run = _build(suites="rmatrix", mode_bound=10)
    assert run.mode_bound == 10


def test_unknown_override() -> None:
    with pytest.raises(ConfigurationError):
        _build(colour="blue")


def test_configure_file(tmp_path: Path) -> None:
    path = tmp_path / "run.cfg"
    path.write_text(
        "# negative control\n"
        "order = 3\n"
        "suites = rmatrix, rtt\n"
        "\n"
        "sample-points = 0\n"
        "no-oracle = true\n"
        "mutate = rtt:t00:1:1/2\n",
        encoding="utf-8",
    )
    cfg = load_config("quick")
    configure_file(cfg, path)
    configure_args(cfg, build_parser().parse_args(["--order", "2"]))
    configure_defaults(cfg)
    run = build_run_config(cfg)
    assert run.order == 2
    assert run.suites == ("rmatrix", "rtt")
    assert run.sample_points == 0
    assert not run.oracle
    assert run.mutate == Mutation.parse("rtt:t00:1:1/2")


@pytest.mark.parametrize("content", ["order 3\n", "colour = blue\n"])
def test_configure_file_rejects(tmp_path: Path, content: str) -> None:
    path = tmp_path / "bad.cfg"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ConfigurationError):
        configure_file(load_config("quick"), path)


def test_configure_file_missing(tmp_path: Path) -> None:
    with pytest.raises(ConfigurationError):
        configure_file(load_config("quick"), tmp_path / "absent.cfg")
