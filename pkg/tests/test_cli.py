"""The batch command surface: exit codes, JSON determinism, witnesses."""

import json

import pytest

from zzqh.cli import run_cli


def _run(capsys, *argv):
    code = run_cli(list(argv))
    return code, capsys.readouterr().out


def test_check_all_small_passes(capsys):
    code, out = _run(capsys, "check", "all", "--n", "1", "--s", "2")
    assert code == 0
    report = json.loads(out)
    assert report["passed"]
    assert len(report["results"]) == 10
    assert all(r["passed"] for r in report["results"])


def test_check_failure_reports_witness(capsys):
    code, out = _run(capsys, "check", "qh", "--algebra", "zigzag",
                     "--n", "2", "--s", "3")
    assert code == 1
    report = json.loads(out)
    assert not report["passed"]
    inner = report["results"][0]["report"]
    assert inner["projectives_delta_filtered"] is False
    assert inner["witnesses"]["projectives_delta_filtered"]


def test_build_nontermination_signal(capsys):
    code, out = _run(capsys, "build", "--algebra", "zigzag",
                     "--n", "1", "--s", "2", "--max-steps", "10")
    assert code == 3
    report = json.loads(out)
    assert report["nonterminating"]
    assert report["max_length"] == 10
    assert report["dims_so_far"] == [2] * 11


def test_max_steps_environment_override(capsys, monkeypatch):
    monkeypatch.setenv("ZZQH_MAX_STEPS", "8")
    code, out = _run(capsys, "build", "--algebra", "zigzag",
                     "--n", "1", "--s", "2")
    assert code == 3
    assert json.loads(out)["max_length"] == 8


def test_argument_errors_exit_two(capsys):
    assert _run(capsys, "build", "--algebra", "fixture:nope",
                "--n", "1", "--s", "2")[0] == 2
    assert _run(capsys, "build", "--algebra", "mystery",
                "--n", "1", "--s", "2")[0] == 2
    assert _run(capsys, "check", "qh", "--n", "1")[0] == 2
    assert _run(capsys, "resolve", "--n", "1", "--s", "2",
                "--module", "ghost:0,2")[0] == 2
    assert _run(capsys, "resolve", "--n", "1", "--s", "2",
                "--module", "simple:9,9")[0] == 2
    assert _run(capsys, "check", "nonsense", "--n", "1", "--s", "2")[0] == 2


def test_build_output_deterministic(capsys):
    _, first = _run(capsys, "build", "--n", "2", "--s", "2")
    _, second = _run(capsys, "build", "--n", "2", "--s", "2")
    assert first == second
    report = json.loads(first)
    assert report["dim"] == 25
    assert report["kind"] == "cover"


def test_cartan_small(capsys):
    code, out = _run(capsys, "cartan", "--n", "1", "--s", "2")
    assert code == 0
    report = json.loads(out)
    assert report["vertices"] == ["0,2", "1,1", "2,0"]
    assert report["matrix"] == [[1, 1, 0], [1, 2, 1], [0, 1, 2]]


def test_dims_blocks(capsys):
    code, out = _run(capsys, "dims", "--n", "1", "--s", "2")
    assert code == 0
    report = json.loads(out)
    assert report["dim"] == 9
    assert report["blocks"]["1,1|1,1"] == {"0,0": 1, "1,1": 1}


def test_resolve_exact_shape(capsys):
    code, out = _run(capsys, "resolve", "--n", "1", "--s", "2",
                     "--module", "simple:0,2", "--grading", "length")
    assert code == 0
    report = json.loads(out)
    assert report["complete"] and report["linear"]["linear"]
    shifts = [[(t["vertex"], t["shift"], t["mult"]) for t in step]
              for step in report["steps"]]
    assert shifts == [[("0,2", 0, 1)], [("1,1", 1, 1)],
                      [("0,2", 2, 1), ("2,0", 2, 1)],
                      [("1,1", 3, 1)], [("0,2", 4, 1)]]


def test_resolve_truncation_exits_three(capsys):
    code, out = _run(capsys, "resolve", "--algebra", "fixture:loop",
                     "--module", "simple:1", "--max-steps", "4")
    assert code == 3
    assert not json.loads(out)["complete"]


def test_dual_emissions(capsys):
    code, dot = _run(capsys, "dual", "--n", "1", "--s", "2", "--emit", "dot")
    assert code == 0
    assert dot.startswith("digraph")
    assert '"1,1" -> "0,2"' in dot or '"0,2" -> "1,1"' in dot
    code, out = _run(capsys, "dual", "--n", "1", "--s", "2", "--emit", "json")
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"vertices", "arrows", "relations"}
    assert len(report["arrows"]) == 4


def test_fixtures_pass(capsys):
    code, out = _run(capsys, "fixtures")
    assert code == 0
    report = json.loads(out)
    assert report["passed"]
    assert report["reports"]["counterexample"]["dim"] == 9
    assert report["reports"]["brauer-line"]["2"]["dim"] == 9
    assert report["reports"]["brauer-line"]["3"]["dim"] == 13


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out = _run(capsys, "cartan", "--n", "1", "--s", "2",
                     "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["matrix"][0] == [1, 1, 0]
