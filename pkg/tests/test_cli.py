import csv
import json

import pytest

from crgenus2.cli import main, render_export
from crgenus2.config import RunConfig


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_sectors_json(capsys):
    code, out = run(capsys, "sectors", "--space", "stable", "--n", "0", "--json")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["entries"]) == 63
    assert set(doc["entries"][0]) >= {"kind", "name", "age", "cohomology", "moduli"}


def test_ages_table(capsys):
    code, out = run(capsys, "ages", "--g", "2", "--n", "1")
    assert code == 0
    assert "IV_3" in out and "7/4" in out


def test_ages_rejects_other_genus(capsys):
    assert main(["ages", "--g", "3"]) == 2


def test_equivariant(capsys):
    code, out = run(capsys, "equivariant", "--n", "5", "--group", "1,0,2,3,4;1,2,0,3,4", "--compact")
    assert (code, out.strip()) == (0, "1 3 1")
    assert main(["equivariant", "--n", "4", "--group", "0,0,1,2"]) == 2


def test_series_compare_exit_codes(capsys):
    assert run(capsys, "series", "--space", "rt", "--max-n", "6", "--compare")[0] == 0
    code, out = run(capsys, "series", "--space", "stable", "--max-n", "1", "--compare")
    assert code == 1
    assert "MISMATCH" in out


def test_series_json_is_exact(capsys):
    code, out = run(capsys, "series", "--space", "smooth", "--max-n", "1", "--graded", "--json")
    doc = json.loads(out)
    assert doc["coefficients"][0].startswith("1 + t^{1/2}")
    assert "." not in out.replace("...", "")


def test_excess_table_and_consistency(capsys):
    code, out = run(capsys, "excess", "--n", "0")
    assert code == 0
    assert "1/9*p" in out
    code, out = run(capsys, "excess", "--consistency")
    assert code == 0 and "PASS" in out


def test_verify_flagged_item_does_not_fail(capsys):
    code, out = run(capsys, "verify", "counts")
    assert code == 0
    assert "FLAGGED: counts.sectors.n3 computed 19, expected 21" in out


def test_verify_failure_exits_one(capsys):
    code, out = run(capsys, "verify", "poincare")
    assert code == 1
    assert "[FAIL" in out


def test_export_sectors_and_ages(tmp_path, capsys):
    path = tmp_path / "s.json"
    assert main(["export", "sectors", "json", str(path)]) == 0
    assert len(json.loads(path.read_text())["sectors"]) == 17
    path = tmp_path / "a.csv"
    assert main(["export", "ages", "csv", "--n", "1", "--out", str(path)]) == 0
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 24
    assert {r["name"]: r["age"] for r in rows}["III_1"] == "4/3"


def test_export_traces(tmp_path):
    path = tmp_path / "t.json"
    assert main(["export", "traces", "json", str(path), "--n", "5"]) == 0
    rows = json.loads(path.read_text())["traces"]
    assert len(rows) == 7
    assert sum(r["class_size"] for r in rows) == 120


def test_export_is_deterministic():
    cfg = RunConfig()
    for kind in ("sectors", "ages", "doubles", "traces"):
        for fmt in ("json", "csv"):
            n = 4 if kind == "traces" else 1
            assert render_export(kind, fmt, 2, n, cfg) == render_export(kind, fmt, 2, n, cfg)


def test_unwritable_path_exits_two(tmp_path, capsys):
    assert main(["export", "sectors", "json", str(tmp_path / "missing" / "x.json")]) == 2
    assert "error" in capsys.readouterr().err


def test_data_flag_takes_precedence(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("CRGENUS2_DATA", str(tmp_path / "nowhere"))
    empty = tmp_path / "empty"
    empty.mkdir()
    (empty / "genus1_betti.json").write_text('{"betti": {}}')
    assert main(["--data", str(empty), "series", "--space", "stable", "--max-n", "1"]) == 2


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(node_rule="other")
    assert RunConfig.from_env(max_n=3).max_n == 3
