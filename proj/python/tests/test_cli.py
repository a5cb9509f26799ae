import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("ALGENTROPY_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="ALGENTROPY_CLI not set")


def run(*args, cwd=None):
    p = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, cwd=cwd, timeout=300)
    return p.returncode, p.stdout, p.stderr


def run_json(*args):
    code, out, err = run(*args)
    assert code == 0, err
    return json.loads(out)


def csv_rows(text):
    rows = list(csv.reader(io.StringIO(text)))
    assert rows, "empty CSV"
    assert len({len(r) for r in rows}) == 1, "ragged CSV"
    return rows


def test_catalog(validate):
    doc = run_json("catalog", "list")
    validate("catalog.schema.json", doc)
    assert len(doc["mappings"]) == 7
    code, out, _ = run("catalog", "list", "--format", "csv")
    assert code == 0
    assert csv_rows(out)[0] == ["name", "variants", "description"]


@pytest.mark.parametrize("entry", ["eq1-qrt", "eq14-hv", "eq20-bedford-kim"])
def test_analyze_catalog(entry, validate):
    doc = run_json("analyze", "--catalog", entry, "--no-timestamp")
    validate("analysis-report.schema.json", doc)
    assert doc["agreement"]["consistent"]
    assert doc["errors"] == []


def test_no_timestamp_is_deterministic():
    a = run("analyze", "--catalog", "eq14-hv", "--no-timestamp")
    b = run("analyze", "--catalog", "eq14-hv", "--no-timestamp")
    assert a[0] == 0 and a[1] == b[1]
    assert '"generated"' not in a[1]
    assert '"generated"' in run("express", "--catalog", "eq14-hv")[1]


def test_analyze_csv():
    code, out, _ = run("analyze", "--catalog", "eq1-qrt", "--degrees", "10", "--iters", "8", "--format", "csv")
    assert code == 0
    rows = csv_rows(out)
    assert rows[0] == ["n", "d_n", "h_n", "ratio"]
    assert [r[1] for r in rows[1:]] == ["0", "1", "1", "2", "3", "5", "6", "9", "11", "14", "17"]


def test_file_inputs(root, validate):
    hv = root / "data" / "mappings" / "hietarinta-viallet.json"
    pats = root / "data" / "patterns" / "hietarinta-viallet.json"
    doc = run_json("analyze", "--file", hv, "--express", "--patterns", pats, "--no-timestamp")
    validate("analysis-report.schema.json", doc)
    assert doc["express"]["characteristic"] == [1, -2, -2, 1]
    validate("verdict.schema.json", run_json("express", "--file", pats))
    bk = run_json("express", "--file", root / "data" / "patterns" / "bedford-kim-m.json", "--set", "m=10")
    assert not bk["integrable"]
    raw = run_json("express-raw", "--file", root / "data" / "raw" / "biquadratic-aux-late.json")
    validate("verdict.schema.json", raw)
    assert raw["characteristic"] == [1, -2, -2, 1]
    pat = run_json("singularity", "--catalog", "eq1-qrt")
    validate("patterns.schema.json", pat)
    assert [p["pattern"] for p in pat["patterns"]] == ["{1, inf, param:a, 0, param:b}", "{param:b, 0, param:a, inf, 1}"]


def test_input_files_match_schemas(root, validate):
    for kind, schema in [("mappings", "mapping"), ("patterns", "pattern-set"), ("raw", "raw-equations"),
                         ("late", "late-block")]:
        for f in sorted((root / "data" / kind).glob("*.json")):
            validate(schema + ".schema.json", json.loads(f.read_text()))


def test_late_limit(root, validate):
    doc = run_json("late-limit", "--file", root / "data" / "late" / "dp1-additive.json", "--limit")
    validate("late-limit.schema.json", doc)
    assert doc["monotone"] and doc["below_limit"]
    assert doc["rows"][0]["lambda"] == "1"
    aux = run_json("late-limit", "--file", root / "data" / "late" / "biquadratic-aux.json", "--limit")
    assert aux["limit"]["lambda"]["lo"] == "3" and aux["limit"]["lambda"]["hi"] == "3"
    code, out, _ = run("late-limit", "--file", root / "data" / "late" / "dp1-additive.json", "--limit",
                       "--format", "csv")
    assert code == 0
    rows = csv_rows(out)
    assert rows[-1][0] == "inf"


def test_dioph(validate, tmp_path):
    svg = tmp_path / "h.svg"
    doc = run_json("dioph", "--catalog", "eq27-dp1-add", "--variant", "generic", "--iters", "25", "--svg", svg)
    validate("height-trace.schema.json", doc)
    assert abs(doc["lambda_last"] - 1.618) < 0.005
    assert svg.read_text().startswith("<svg")
    code, out, _ = run("dioph", "--catalog", "eq1-qrt", "--iters", "10", "--format", "csv")
    rows = csv_rows(out)
    assert rows[0] == ["n", "h_n", "ratio"] and len(rows) == 12


def test_exit_codes(root, tmp_path):
    assert run("analyze", "--file", tmp_path / "missing.json")[0] == 1
    assert run("analyze", "--catalog", "no-such-mapping")[0] == 1
    assert run("dioph", "--catalog", "eq1-qrt", "--x0", "0.5")[0] == 1
    assert run("analyze", "--bogus-flag")[0] == 1
    assert run("--help")[0] == 0
    bad = tmp_path / "float.json"
    bad.write_text(json.dumps({"name": "f", "update": "a*x - y", "parameters": {"a": 0.5}}))
    code, _, err = run("analyze", "--file", bad, "--degrees", "8")
    assert code == 1 and "format" in err
    code, _, err = run("express-raw", "--file", root / "data" / "raw" / "underdetermined.json")
    assert code == 2 and "nderdetermined" in err


def test_disagreement_exits_2(root, tmp_path):
    # A pattern set from another mapping contradicts the observed degree growth.
    code, out, err = run("analyze", "--file", root / "data" / "mappings" / "qrt.json", "--degrees", "14",
                         "--express", "--patterns", root / "data" / "patterns" / "hietarinta-viallet.json",
                         "--no-timestamp")
    assert code == 2
    assert not json.loads(out)["agreement"]["consistent"]
    assert "disagree" in err


def test_config_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\niters = 7\nno-timestamp = true\nprecision = 20\n")
    doc = run_json("dioph", "--catalog", "eq1-qrt", "--config", cfg)
    assert len(doc["samples"]) == 8 and "generated" not in doc
    doc = run_json("dioph", "--catalog", "eq1-qrt", "--config", cfg, "--iters", "9")
    assert len(doc["samples"]) == 10
