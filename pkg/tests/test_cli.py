import json
import subprocess
import sys

import pytest

from symdiv.cli import main, render


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def coeffs(doc):
    return {r["index"]: r["coeff"] for r in doc["rows"]}


def test_expand_schur(capsys):
    code, doc = run_json(capsys, "expand", "s", "--lam", "4,4,2", "--k", "2", "--map", "row")
    assert code == 0
    assert coeffs(doc) == {"2,2,1": "1", "2,1,1,1": "1", "1,1,1,1,1": "7"}


def test_expand_e_in_e(capsys):
    code, doc = run_json(capsys, "expand", "e", "--mu", "2,2,2,1,1", "--k", "2", "--out", "e")
    assert code == 0 and coeffs(doc) == {"4": "136", "3,1": "14", "2,2": "2"}


def test_expand_versch_and_col(capsys):
    _, doc = run_json(capsys, "expand", "s", "--lam", "6,4", "--map", "versch")
    assert coeffs(doc) == {"5": "1", "4,1": "1", "3,2": "1"}
    _, doc = run_json(capsys, "expand", "s", "--lam", "10,10,2,2", "--map", "col")
    assert coeffs(doc)["3,3,3,3"] == "-14"


def test_divide_quasisymmetric(capsys):
    _, doc = run_json(capsys, "divide", "F", "--alpha", "4,2", "--k", "2")
    assert coeffs(doc) == {"2,1": "1"}
    _, doc = run_json(capsys, "divide", "F", "--alpha", "4,2", "--map", "col", "--out", "M")
    assert coeffs(doc) == {"1,2": "1", "2,1": "1", "1,1,1": "1"}


def test_euler_and_gamma(capsys):
    code, doc = run_json(capsys, "euler", "--mu", "1,1,1,1,1,1", "--k", "2")
    assert code == 0 and doc["agree"] and {r["value"] for r in doc["rows"]} == {61}
    code, doc = run_json(capsys, "gamma", "--n", "4", "--k", "2")
    assert [r["gamma"] for r in doc["rows"]] == [1, 24, 16]


def test_scans(capsys):
    code, doc = run_json(capsys, "scan", "e-positivity", "--k", "2", "--nmax", "3")
    assert code == 0 and doc["violation_count"] == 0
    code, doc = run_json(capsys, "scan", "atom-positivity", "--bound", "4", "--k", "2")
    assert code == 0 and doc["violation_count"] == 0
    code, doc = run_json(capsys, "scan", "e-positivity", "--k", "1", "--nmax", "5")
    assert code == 0


def test_verify_selected(capsys):
    code, doc = run_json(capsys, "verify", "coldiv-negativity", "gamma")
    assert code == 0 and doc["passed"]
    assert [r["check"] for r in doc["rows"]] == ["coldiv-negativity", "gamma"]
    assert all("seconds" not in r for r in doc["rows"])
    assert doc["rows"][0]["details"]["witness"] == "-14"


def test_verify_schur_expansion_default_bound(capsys):
    code, doc = run_json(capsys, "verify", "thm-schur-expansion", "--nmax", "4", "--k", "2,3")
    assert code == 0 and doc["rows"][0]["status"] == "pass"


def test_verify_all_small(capsys):
    code, doc = run_json(capsys, "verify", "all", "--nmax", "3")
    assert code == 0 and doc["passed"]
    assert all(r["status"] == "pass" for r in doc["rows"])


def test_verify_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "euler", "sum-by-length")
    _, b, _ = run(capsys, "verify", "euler", "sum-by-length")
    assert a == b


def test_verify_timings(capsys):
    _, doc = run_json(capsys, "verify", "gamma", "--timings")
    assert "seconds" in doc["rows"][0]


def test_chromatic(capsys, tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("1 2\n2 3\n3 4\n")
    code, doc = run_json(capsys, "chromatic", "--graph", str(path), "--k", "2")
    assert code == 0 and doc["phi_stable"] == doc["phi_orientations"] == 2


def test_demazure(capsys):
    _, doc = run_json(capsys, "demazure", "--op", "rowdiv", "--alpha", "0,3,1,4", "--k", "2",
                      "--expand", "key")
    assert coeffs(doc) == {"0,2,1,1": "1", "1,1,0,2": "1", "1,1,1,1": "1", "1,2,0,1": "-1"}


@pytest.mark.parametrize("argv", [
    ["expand", "s", "--lam", "2,3"],
    ["expand", "q", "--lam", "2"],
    ["expand", "s"],
    ["gamma", "--n", "0"],
    ["verify", "no-such-check"],
    ["frobnicate"],
    ["chromatic", "--graph", "/nonexistent/graph.txt"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


def test_resource_limit(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_degree": 2}))
    code, out, _ = run(capsys, "--config", str(cfg), "verify", "thm-schur-expansion", "gamma")
    doc = json.loads(out)
    assert code == 3
    # partial report: the limited check is flagged, the other still runs
    assert [r["status"] for r in doc["rows"]] == ["resource-limit", "pass"]
    code, _, _ = run(capsys, "expand", "s", "--lam", "40", "--config", str(cfg))
    assert code == 3


def test_bad_config_key(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"colour": "blue"}))
    assert run(capsys, "--config", str(cfg), "gamma", "--n", "2")[0] == 1


def test_global_options_either_side(capsys):
    a = run(capsys, "--format", "tsv", "gamma", "--n", "3")
    b = run(capsys, "gamma", "--n", "3", "--format", "tsv")
    assert a == b and a[0] == 0


def test_formats_carry_same_data(capsys):
    _, doc = run_json(capsys, "expand", "s", "--lam", "4,4,2")
    _, tsv, _ = run(capsys, "expand", "s", "--lam", "4,4,2", "--format", "tsv")
    lines = [line for line in tsv.splitlines() if not line.startswith("#")]
    header = lines[0].split("\t")
    rows = [dict(zip(header, line.split("\t"))) for line in lines[1:]]
    assert rows == [{k: str(v) for k, v in r.items()} for r in doc["rows"]]
    _, pretty, _ = run(capsys, "expand", "s", "--lam", "4,4,2", "--format", "pretty")
    for r in doc["rows"]:
        assert any(r["index"] in line and r["coeff"] in line for line in pretty.splitlines())


def test_render_meta_lines():
    text = render({"command": "x", "rows": [{"a": 1}]}, "pretty")
    assert text.splitlines()[0] == "# command: x"


def test_env_threads(capsys, monkeypatch):
    monkeypatch.setenv("SYMDIV_THREADS", "2")
    code, doc = run_json(capsys, "scan", "e-positivity", "--k", "2", "--nmax", "2")
    assert code == 0 and doc["violation_count"] == 0


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "symdiv.cli", "gamma", "--n", "2"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["rows"][1]["gamma"] == 4
