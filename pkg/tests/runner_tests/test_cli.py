from __future__ import annotations

import json

import pytest

from yangso3.catalog import CATALOG
from yangso3.runner import main

RMATRIX_ARGS = ["--suites", "rmatrix", "--order", "2", "--sizes", "3", "--sample-points", "2"]


def test_catalog(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["--catalog"]) == 0
    out = capsys.readouterr().out
    assert len(out.splitlines()) == len(CATALOG)


def test_rmatrix_suite(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(RMATRIX_ARGS) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["summary"]["failed"] == 0
    assert {r["suite"] for r in data["records"]} == {"rmatrix"}
    assert data["config"]["sizes"] == [3]


@pytest.mark.parametrize(
    "args",
    [
        ["--points", "1/0"],
        ["--order", "1"],
        ["--suites", "everything"],
        ["--depth", "1"],
        ["--mutate", "gauss:kMinus1:1:1", "--suites", "rtt"],
        ["--preset", "missing"],
    ],
)
def test_configuration_errors(args: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    assert main(args) == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_missing_config_file(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["--config", "/nonexistent/run.cfg"]) == 2


def test_rmatrix_mutation(capsys: pytest.CaptureFixture[str]) -> None:
    assert main([*RMATRIX_ARGS, "--mutate", "rmatrix:P:0:1"]) == 1
    data = json.loads(capsys.readouterr().out)
    failed = {r["identity"]: r for r in data["records"] if r["verdict"] == "FAIL"}
    flip = failed["rmatrix.flip_involution"]
    assert (flip["row"], flip["col"]) == (0, 0)
    assert (flip["lhs"], flip["rhs"]) == ("4", "1")
    assert data["config"]["mutate"] == "rmatrix:P:0:1"


def test_quick_preset_passes(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["--preset", "quick"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1].endswith("failed=0 skipped=0")
    assert "FAIL" not in out


def test_quick_preset_deterministic(capsys: pytest.CaptureFixture[str]) -> None:
    args = ["--preset", "quick", "--format", "json", "--suites", "rtt,gauss"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first


def test_negative_point(capsys: pytest.CaptureFixture[str]) -> None:
    args = ["--preset", "quick", "--points=-2/5", "--suites", "unitarity", "--format", "json"]
    assert main(args) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["config"]["points"] == ["-2/5"]
    assert {r["parameters"] for r in data["records"]} == {"K=4 m=1 a=-2/5"}


def test_timings(capsys: pytest.CaptureFixture[str]) -> None:
    assert main([*RMATRIX_ARGS, "--timings", "--sizes", "3"]) == 0
    records = json.loads(capsys.readouterr().out)["records"]
    assert all(isinstance(r["elapsed_ms"], int) for r in records)


def test_verbose_progress(capsys: pytest.CaptureFixture[str]) -> None:
    assert main([*RMATRIX_ARGS, "--verbose"]) == 0
    err = capsys.readouterr().err
    assert "Using suites: rmatrix" in err
    assert "Parameters: K=2 m=2 a=0,1/3" in err


@pytest.mark.parametrize(
    "mutation, identity",
    [
        ("rmatrix:P:0:1", "rmatrix.flip_involution"),
        ("rtt:t-10:1:1", "rtt.matrix"),
        ("unitarity:c:1:1", "unitarity.normalization"),
        ("gauss:kMinus1:1:1", "gauss.reconstruction"),
        ("relations:eM10:1:1", "gauss.e01_shift"),
        ("drinfeld:Xplus:1:1", "drinfeld.xplus_xminus"),
        ("roundtrip:kMinus1:1:1", "drinfeld.full_roundtrip"),
    ],
)
def test_mutation_detected(mutation: str, identity: str, capsys: pytest.CaptureFixture[str]) -> None:
    suite = mutation.split(":")[0]
    args = ["--preset", "quick", "--format", "json", "--suites", suite, "--mutate", mutation]
    assert main(args) == 1
    data = json.loads(capsys.readouterr().out)
    failed = {r["identity"] for r in data["records"] if r["verdict"] == "FAIL"}
    assert identity in failed
    assert {r["suite"] for r in data["records"]} == {suite}


def test_section3_alias(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["--preset", "quick", "--format", "json", "--suites", "section3", "--no-oracle"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["config"]["suites"] == ["relations"]
    assert data["config"]["oracle"] is False
    assert len(data["records"]) == 19


@pytest.mark.slow
@pytest.mark.parametrize(
    ("depth", "points"),
    [("1", "0"), ("1", "1/3"), ("2", "0,1/3")],
)
def test_acceptance_run(depth: str, points: str, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["--format", "json", "--depth", depth, "--points", points]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["config"]["order"] == 8
    assert data["config"]["points"] == points.split(",")
    assert data["summary"]["failed"] == 0
    assert data["summary"]["skipped"] == 0


def test_non_invertible_mutation_skips_inverse(capsys: pytest.CaptureFixture[str]) -> None:
    args = ["--preset", "quick", "--format", "json", "--suites", "rtt", "--mutate", "rtt:t00:0:1"]
    with pytest.warns(UserWarning, match="Inverse relations skipped"):
        assert main(args) == 1
    records = {r["identity"]: r for r in json.loads(capsys.readouterr().out)["records"]}
    assert records["rtt.constant_term"]["verdict"] == "FAIL"
    assert records["rtt.constant_term"]["r"] == 0
    assert records["rtt.inverse_matrix"]["verdict"] == "SKIP"
    assert records["rtt.inverse_generating"]["verdict"] == "SKIP"
