import csv
import io
import json
import subprocess
import sys

import pytest

from skewz4.analysis import default_manifest_path
from skewz4.cli import EXPORT_COLUMNS, main

G9 = "(1+v)+(1+3v)x+(3+2v)x^2+3x^3+(3+3v)x^4+(2+2v)x^5+(2+3v)x^6+(3+3v)x^7+(1+3v)x^8"
G12 = (
    "1+2vx+(3+2v)x^2+(2+2v)x^3+(1+2v)x^4+x^5+vx^6+x^7+(1+2v)x^8+(3+2v)x^9"
    "+(1+3v)x^10+(3+3v)x^11+(2+v)x^12+(3+3v)x^13+x^14+(2+v)x^15+(2+2v)x^16"
)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_analyze_free_text():
    code, out = run("analyze", "3+x", "--n", "4", "--free")
    assert code == 0
    assert "gray     [8, 4^6 2^0, 2]" in out
    assert "res      [4, 4^3 2^0, 2]" in out
    assert "plotkin  [8, 4^6 2^0, 2]" in out
    assert "right divisor of x^4-1: yes" in out


def test_analyze_json():
    code, out = run("analyze", G9, "--n", "9", "--k", "3", "--select", "res", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["params"]["res"] == {"n": 9, "k1": 3, "k2": 0, "dL": 7}


def test_analyze_csv_columns():
    code, out = run("analyze", G12, "--n", "18", "--k", "3", "--select", "tor", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert tuple(rows[0]) == EXPORT_COLUMNS
    assert (rows[0]["n"], rows[0]["k1"], rows[0]["k2"], rows[0]["dL"]) == ("18", "3", "0", "14")


def test_analyze_second_derivation():
    code, out = run("analyze", "3v+(2+v)x+3vx^2+vx^3", "--n", "4", "--k", "3",
                    "--derivation", "3+2v", "--select", "tor")
    assert code == 0 and "[4, 4^1 2^2, 4]" in out


def test_analyze_errors():
    assert run("analyze", "3+y", "--n", "4", "--free")[0] == 2
    assert run("analyze", "3+x", "--n", "4")[0] == 2
    assert run("analyze", "1+vx+x^2", "--n", "5", "--free")[0] == 1
    assert run("analyze", "3+x", "--n", "4", "--free", "--derivation", "2v")[0] == 2
    assert run("frobnicate")[0] == 2


def test_verify_shipped_manifest(tmp_path):
    report = tmp_path / "report.json"
    code, out = run("verify", "--format", "json", "--report", str(report))
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "skewz4.verify/1"
    assert data["summary"]["fail"] == 0 and data["summary"]["error"] == 0
    assert json.loads(report.read_text()) == data
    labels = {r["label"] for r in data["rows"]}
    assert {"T1.1", "T2.g8", "CR.1"} <= labels


def test_verify_negative_control(tmp_path):
    data = json.loads(default_manifest_path().read_text())
    data["rows"] = [r for r in data["rows"] if r["label"] in ("T1.1", "CR.1")]
    data["rows"][0]["expected"]["gray"] = "[8,4^6 2^0,3]"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out = run("verify", "--manifest", str(bad))
    assert code == 1
    assert "FAIL  T1.1     gray" in out
    assert "PASS  CR.1" in out


def test_verify_error_row(tmp_path):
    data = {"version": 1, "rows": [{"label": "X", "generator": "1+vx+x^2", "n": 5, "k": "free",
                                    "expected": {"res": "[5,4^3 2^0,2]"}}]}
    p = tmp_path / "m.json"
    p.write_text(json.dumps(data))
    code, out = run("verify", "--manifest", str(p), "--format", "csv")
    assert code == 1
    assert "ERROR" in out


def test_search_exports_and_determinism():
    args = ("search", "--n", "4-6", "--degree", "2,3", "--k", "2-3", "--seed", "9", "--samples", "80", "--format", "json")
    code, a = run(*args)
    code2, b = run(*args)
    assert code == code2 == 0
    assert a == b
    records = json.loads(a)
    assert records and all(set(EXPORT_COLUMNS) <= set(r) for r in records)
    code, out = run("search", "--n", "4", "--degree", "1", "--free", "--exhaustive", "--select", "gray", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert ("8", "6", "0", "2") in {(r["n"], r["k1"], r["k2"], r["dL"]) for r in rows}


def test_search_empty_range():
    code, out = run("search", "--n", "4", "--degree", "", "--format", "json")
    assert code == 0 and json.loads(out) == []


def test_ideals_and_center_check():
    code, out = run("ideals")
    assert code == 0
    assert "<v> = {0, v, 2v, 3v}" in out
    assert len(out.strip().splitlines()) == 7
    code, out = run("center-check", "2+x^2", "--format", "json")
    assert code == 0 and json.loads(out)["central"] is True
    code, out = run("center-check", "v+x^2")
    assert code == 0 and "not central" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewz4", "ideals"], capture_output=True, text=True)
    assert proc.returncode == 0 and "<2+v>" in proc.stdout


@pytest.mark.slow
def test_verify_with_fallback_backend():
    import os

    env = dict(os.environ, SKEWZ4_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-m", "skewz4", "verify", "--format", "json"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["summary"]["fail"] == 0
