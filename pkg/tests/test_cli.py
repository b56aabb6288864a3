import json

import pytest

from tadpole.catalog import builtin
from tadpole.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(capsys, "list", "--format", "json")
    assert code == 0
    assert [f["name"] for f in json.loads(out)] == ["weierstrass", "e6", "e7", "e7prime", "d5", "q7"]


def test_formal_check(capsys):
    code, out, _ = run(capsys, "check", "--family", "weierstrass", "--base", "formal", "--dim", "3")
    assert code == 0 and "PASS" in out


def test_all_numeric_json(capsys):
    code, out, _ = run(capsys, "check", "--family", "all", "--base", "P2", "--L", "3", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 6
    for r in reports:
        assert set(r) >= {"family", "base", "mode", "degrees", "verdict", "ledger"}
        assert all(set(row) == {"k", "lhs", "rhs", "diff"} for row in r["degrees"])
        assert r["verdict"] == "pass"


def test_missing_s_is_config_error(capsys):
    code, _, err = run(capsys, "check", "--family", "q7", "--base", "P2", "--L", "3")
    assert code == 2 and "--S" in err


@pytest.mark.parametrize("argv", [
    ["check", "--family", "foo", "--base", "formal", "--dim", "2"],
    ["check", "--family", "e6", "--base", "Q2", "--L", "1"],
    ["check", "--family", "e6", "--base", "P2"],
    ["check", "--family", "e6", "--base", "formal"],
    ["check", "--family", "e6", "--base", "formal", "--dim", "9"],
    ["cross-check", "--family", "e6", "--base", "formal", "--dim", "2"],
])
def test_config_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_failing_check_exits_1(capsys):
    code, out, _ = run(capsys, "check", "--family", "e6", "--base", "P2", "--L", "3", "--row", "published")
    assert code == 1 and "FAIL" in out


def test_out_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["check", "--family", "d5", "--base", "P3", "--L", "4", "--format", "json",
                     "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["family"] == "d5"


def test_scenario_file(tmp_path, capsys):
    path = tmp_path / "w.json"
    path.write_text(json.dumps(builtin("weierstrass")))
    code, out, _ = run(capsys, "check", "--scenario", str(path), "--base", "P1", "--L", "2", "--format", "json")
    assert code == 0 and json.loads(out)["ledger"]["chi_Y"] == 24


def test_cross_check_and_jobs(capsys):
    code, out, _ = run(capsys, "cross-check", "--family", "all", "--base", "P2", "--L", "3",
                       "--format", "json", "--jobs", "2")
    assert code == 0
    assert [r["family"] for r in json.loads(out)] == ["weierstrass", "e6", "e7", "e7prime", "d5", "q7"]


def test_max_dim_flag(capsys, monkeypatch):
    monkeypatch.delenv("TADPOLE_MAX_DIM", raising=False)
    assert run(capsys, "check", "--family", "weierstrass", "--dim", "5", "--max-dim", "5")[0] == 0
