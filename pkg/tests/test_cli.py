import json
import subprocess
import sys

import pytest

from torusloc import cases, cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_roots_json(capsys):
    code, out, _ = run(capsys, "roots", "--type", "B3", "--json")
    data = json.loads(out)
    assert code == 0 and set(data) == {"type", "roots", "long", "short", "lattice"}


def test_polytope_edges(capsys):
    code, out, _ = run(capsys, "polytope", "--roots", "F4", "--edges-at-vertex", "1,1,0,0", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["edge_counts"] == {"(1,1,0,0)": 8} and data["vertices"] == 24
    code, out, _ = run(capsys, "polytope", "--roots", "F4", "--edges-at-vertex", "1,1,0,0", "--method", "rank", "--directions")
    assert code == 0 and "8 edges at (1,1,0,0)" in out


def test_polytope_bad_vertex(capsys):
    code, _, err = run(capsys, "polytope", "--roots", "F4", "--edges-at-vertex", "1,0,0,0")
    assert code == 2 and "not a vertex" in err


def test_model_emit_then_localize(capsys, tmp_path):
    path = tmp_path / "b3.json"
    code, _, _ = run(capsys, "model", "--name", "adjoint-B3", "--emit", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert {"rank", "ambient_dim", "points", "curves", "unknowns"} <= set(data)
    assert set(data["points"][0]) == {"label", "mu", "compass"}
    assert set(data["points"][0]["compass"][0]) == {"nu", "mult"}
    code, out, _ = run(capsys, "localize", str(path), "--certify", "--json")
    assert code == 0 and json.loads(out)["value_at_one"] == 21


def test_localize_solve(capsys, tmp_path):
    path = tmp_path / "s.json"
    run(capsys, "model", "--name", "interval-threefold", "--emit", str(path))
    code, out, _ = run(capsys, "localize", str(path), "--solve", "--specialize", "1", "--json")
    assert code == 0 and json.loads(out)["solution"] == {"a": 3, "b": 3}


def test_localize_failure_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(cases.corrupted_adjoint_data().to_json()))
    code, out, _ = run(capsys, "localize", str(path), "--certify")
    assert code == 1 and "not a Laurent polynomial" in out


def test_localize_unreadable(capsys, tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{")
    code, _, _ = run(capsys, "localize", str(path), "--certify")
    assert code == 2


def test_model_unknown(capsys):
    code, _, err = run(capsys, "model", "--name", "grassmannian")
    assert code == 2 and "unknown model" in err


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--dim", "7", "--degree", "56", "--p1", "21")
    assert code == 0
    assert "c1(TX)^2 c1(L)^5 = 16deg" in out and "bound: pass" in out
    code, out, _ = run(capsys, "hilbert", "--dim", "9", "--degree", "7", "--p1", "30")
    assert code == 1 and "parity: fail" in out
    code, out, _ = run(capsys, "hilbert", "--dim", "7", "--json")
    data = json.loads(out)
    assert set(data) >= {"p_coeffs", "identities", "bound"}
    code, _, _ = run(capsys, "hilbert", "--dim", "8")
    assert code == 2


def test_run_case_and_determinism(capsys):
    code, first, _ = run(capsys, "run", "--case", "hirzebruch-localization", "--json")
    code2, second, _ = run(capsys, "--case", "hirzebruch-localization", "--json")
    assert code == code2 == 0
    assert first == second
    report = json.loads(first)[0]
    assert report["verdict"] == "pass"
    assert all(c["oracle"] in cases.ORACLES for c in report["checks"])


def test_run_unknown_case(capsys):
    code, _, err = run(capsys, "run", "--case", "no-such-case")
    assert code == 2 and "unknown case" in err
    code, _, _ = run(capsys, "run")
    assert code == 2


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_cases_listing(capsys):
    code, out, _ = run(capsys, "cases", "--json")
    listed = json.loads(out)
    assert code == 0
    assert {c["criterion"] for c in listed} >= set(range(1, 13))
    code, out, _ = run(capsys, "cases", "--module", "contactrr", "--json")
    assert {c["module"] for c in json.loads(out)} == {"contactrr"}
    assert len(cases.list_cases("")) == len(cases.list_cases(None)) == len(cases.REGISTRY)


def test_failing_check_gives_exit_code_one(capsys, monkeypatch):
    bad = cases.Case("always-wrong", "cli", "a deliberately wrong expectation", lambda: [cases.Check("x", 1, 2, "trivial")])
    monkeypatch.setitem(cases.REGISTRY, bad.name, bad)
    code, out, _ = run(capsys, "run", "--case", "always-wrong")
    assert code == 1 and "MISMATCH" in out


def test_errors_inside_cases_are_reported(capsys, monkeypatch):
    def boom():
        raise RuntimeError("broken pipeline")

    monkeypatch.setitem(cases.REGISTRY, "boom", cases.Case("boom", "cli", "raises", boom))
    report = cases.run_case("boom")
    assert not report.passed and "broken pipeline" in report.error
    with pytest.raises(KeyError):
        cases.run_case("missing")


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("TORUSLOC_THREADS", "4")
    code, out, _ = run(capsys, "run", "--case", "g2-sevenfold-h0", "--case", "hirzebruch-localization")
    assert code == 0 and out.count("[PASS]") == 2
    monkeypatch.setenv("TORUSLOC_THREADS", "lots")
    assert cli._threads() == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "torusloc", "cases"], capture_output=True, text=True)
    assert res.returncode == 0 and "hilbert-formulas" in res.stdout
