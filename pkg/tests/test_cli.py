import json
import os

import pytest

import stirval.cli as cli
from stirval import CheckRecord, Valuation, VerificationReport
from stirval.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stirling_plain(capsys):
    code, out, _ = run_cli(capsys, "stirling", "9", "6")
    assert code == 0 and out == "4536\n"
    code, out, _ = run_cli(capsys, "stirling", "3", "2")
    assert code == 0 and out == "3\n"


def test_stirling_shift(capsys):
    code, out, _ = run_cli(capsys, "stirling", "2", "1", "--shift", "2")
    assert code == 0 and out == "5\n"


def test_stirling_json_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "stirling", "9", "6", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"n": 9, "k": 6, "m": None, "value": "4536"}
    assert json.dumps(doc, indent=2) == out.strip()


def test_stirling_domain_error(capsys):
    code, _, err = run_cli(capsys, "stirling", "3", "5", "--shift", "1")
    assert code == 1 and "error:" in err


def test_val_both(capsys):
    code, out, _ = run_cli(
        capsys, "val", "--p", "3", "--a", "1", "--n", "2", "--t", "6", "--method", "both"
    )
    assert code == 0 and out == "formula=4 exact=4 match=true\n"


def test_val_formula_only(capsys):
    code, out, _ = run_cli(
        capsys, "val", "--p", "3", "--a", "2", "--n", "1", "--t", "3", "--method", "formula"
    )
    assert code == 0 and out == "2\n"
    code, out, _ = run_cli(
        capsys, "val", "--p", "3", "--a", "1", "--n", "2", "--t", "9", "--method", "formula"
    )
    assert code == 0 and out == "0\n"


def test_val_general_p(capsys):
    code, out, _ = run_cli(
        capsys, "val", "--p", "5", "--a", "1", "--n", "1", "--t", "3", "--method", "both"
    )
    assert code == 0
    assert "match=true" in out


def test_val_unimplemented_formula_suggests_exact(capsys):
    # a = 4, t = 2 falls below the bottom cell at p = 7
    code, _, err = run_cli(
        capsys, "val", "--p", "7", "--a", "4", "--n", "1", "--t", "2", "--method", "formula"
    )
    assert code == 1 and "--method exact" in err
    code, out, _ = run_cli(
        capsys, "val", "--p", "7", "--a", "4", "--n", "1", "--t", "2", "--method", "exact"
    )
    assert code == 0 and out.strip().isdigit()


def test_val_mismatch_statuses(capsys, monkeypatch):
    monkeypatch.setattr(cli, "_formula_valuation", lambda *a: Valuation(99))
    code, out, _ = run_cli(capsys, "val", "--p", "3", "--a", "1", "--n", "1", "--t", "1")
    assert code == 2 and "match=false" in out  # proven form: a bug
    code, out, _ = run_cli(capsys, "val", "--p", "5", "--a", "1", "--n", "1", "--t", "2")
    assert code == 3 and "match=false" in out  # conjectural form: a deviation


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "--a", "1", "--n", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "a,n,t,m,k,epsilon_k,v3_formula,v3_exact,match"
    assert len(lines) == 10  # header + 9 data rows
    t6 = lines[6].split(",")
    assert t6[2] == "6" and t6[6] == "4" and t6[8] == "true"
    assert all(line.endswith("true") for line in lines[1:])


def test_table_csv_small(capsys):
    code, out, _ = run_cli(capsys, "table", "--a", "2", "--n", "1", "--format", "csv")
    assert code == 0
    assert len(out.strip().split("\n")) == 7


def test_table_atomic_output(tmp_path, capsys):
    target = tmp_path / "grid.csv"
    code, out, _ = run_cli(
        capsys, "table", "--a", "1", "--n", "1", "--format", "csv", "--output", str(target)
    )
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.startswith("a,n,t,m,k,epsilon_k,v3_formula,v3_exact,match\n")
    assert len(text.strip().split("\n")) == 4
    # no leftover temp files from the atomic rename
    assert os.listdir(tmp_path) == ["grid.csv"]


def test_table_json(capsys):
    code, out, _ = run_cli(capsys, "table", "--a", "1", "--n", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["a"] == 1 and len(doc["rows"]) == 3
    assert doc["rows"][0]["match"] is True


def test_harmonic_plain(capsys):
    code, out, _ = run_cli(capsys, "harmonic", "3", "1", "--p", "3")
    assert code == 0 and out == "11/6  v_3 = -1\n"
    code, out, _ = run_cli(capsys, "harmonic", "5", "0", "--p", "3")
    assert code == 0 and out == "1  v_3 = 0\n"


def test_harmonic_check_and_json(capsys):
    code, out, _ = run_cli(capsys, "harmonic", "3", "1", "--p", "3", "--check")
    assert code == 0 and "ok" in out
    code, out, _ = run_cli(capsys, "harmonic", "27", "1", "--p", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["valuation"] == "-3"
    assert doc["numerator"].isdigit() and doc["denominator"].isdigit()


def test_verify_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm1", "--a", "1", "--n", "3")
    assert code == 0
    assert "total=25" in out and "failed=0" in out


def test_verify_conjecture_status(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "conjecture13", "--p", "5", "--a", "1", "--n-max", "1"
    )
    assert code == 0 and "deviations=0" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "nosuch")
    assert code == 1 and "valid suites" in err


def test_verify_bad_limit(capsys):
    code, _, err = run_cli(capsys, "verify", "thm1", "--m-max", "2")
    assert code == 1 and "unknown limit" in err


def test_verify_json_roundtrip(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, _, _ = run_cli(
        capsys, "verify", "cor1", "--a", "1", "--n", "2", "--format", "json",
        "--output", str(target),
    )
    assert code == 0
    text = target.read_text()
    assert json.dumps(json.loads(text), indent=2) == text.strip()


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm1", "--a", "1", "--n", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "check_id,a,n,t,expected,actual,pass"


def test_verify_failure_statuses(capsys, monkeypatch):
    broken = VerificationReport(
        "thm1", [CheckRecord("thm1", {"a": 1, "n": 1, "t": 1}, "1", "0", False)]
    )
    monkeypatch.setattr(cli, "sweep", lambda suite, limits: broken)
    code, out, _ = run_cli(capsys, "verify", "thm1")
    assert code == 2 and "failed=1" in out

    deviating = VerificationReport(
        "conjecture13",
        [CheckRecord("conjecture13", {"a": 1, "k": 2, "m": 1, "n": 1, "p": 5}, "1", "0", False)],
    )
    monkeypatch.setattr(cli, "sweep", lambda suite, limits: deviating)
    code, out, _ = run_cli(capsys, "verify", "conjecture13")
    assert code == 3 and "deviations=1" in out


def test_bench_smoke(capsys):
    code, out, _ = run_cli(capsys, "bench", "--a", "1", "--n", "1", "--reps", "1")
    assert code == 0 and "speedup" in out
    code, out, _ = run_cli(
        capsys, "bench", "--a", "2", "--n", "2", "--reps", "1", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["formula_ns_per_query"] > 0 and doc["exact_ns_per_query"] > 0


def test_no_arguments_is_usage_error(capsys):
    code, _, err = run_cli(capsys)
    assert code == 1 and "error:" in err


def test_val_row_cap(capsys):
    code, _, err = run_cli(
        capsys, "val", "--p", "3", "--a", "1", "--n", "9", "--t", "1", "--method", "exact"
    )
    assert code == 1 and "row too large" in err
