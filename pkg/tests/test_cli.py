"""CLI surface: exit-code contract, fixture generation, determinism."""

import json
import os

import pytest
from click.testing import CliRunner

from homoper.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def fix(runner, tmp_path):
    """example25 (a,b) = (1,1), rho = (3,5): twist-compatible instance."""
    out = tmp_path / "fix"
    r = runner.invoke(main, ["example", "example25", "-a", "1", "-b", "1",
                             "--rho1", "3", "--rho2", "5", "-o", str(out)])
    assert r.exit_code == 0, r.output
    return out


def _paths(fix):
    return ["-a", str(fix / "algebra.json"), "-m", str(fix / "bimodule.json"),
            "-t", str(fix / "rb.json")]


def test_verify_algebra_pass(runner, fix):
    r = runner.invoke(main, ["verify", "algebra", str(fix / "algebra.json")])
    assert r.exit_code == 0 and "ok" in r.output


def test_verify_algebra_fail_alpha_id(runner, tmp_path):
    out = tmp_path / "f"
    runner.invoke(main, ["example", "example25", "-a", "1", "-b", "2",
                         "--alpha-id", "-o", str(out)])
    r = runner.invoke(main, ["verify", "algebra", str(out / "algebra.json")])
    assert r.exit_code == 1
    # defect (a-b)b x3 = -2 x3 on (x1, x1, x3)
    assert "(0, 0, 2)" in r.output and "-2" in r.output


def test_verify_missing_file_exit_2(runner):
    r = runner.invoke(main, ["verify", "algebra", "no-such-file.json"])
    assert r.exit_code == 2


def test_verify_o_operator_and_bimodule(runner, fix):
    r = runner.invoke(main, ["verify", "bimodule", str(fix / "bimodule.json")])
    assert r.exit_code == 0
    r = runner.invoke(main, ["verify", "o-operator"] + _paths(fix))
    assert r.exit_code == 0, r.output


def test_json_report(runner, tmp_path):
    out = tmp_path / "f"
    runner.invoke(main, ["example", "example25", "-a", "1", "-b", "2",
                         "--alpha-id", "-o", str(out)])
    r = runner.invoke(main, ["--json", "verify", "algebra",
                             str(out / "algebra.json")])
    assert r.exit_code == 1
    data = json.loads(r.output)
    assert data["ok"] is False and data["violations"]


def test_field_flag_mismatch(runner, fix):
    r = runner.invoke(main, ["--field", "Fp:7", "verify", "algebra",
                             str(fix / "algebra.json")])
    assert r.exit_code == 2


def test_cohomology_output(runner, fix, tmp_path):
    reps = tmp_path / "reps"
    r = runner.invoke(main, ["cohomology"] + _paths(fix)
                      + ["--degree", "1", "--reps", str(reps)])
    assert r.exit_code == 0, r.output
    assert "Z^1=4 B^1=1 H^1=3" in r.output
    assert len(list(reps.glob("rep*.json"))) == 3


def test_degree_cap_env(runner, fix, monkeypatch):
    monkeypatch.setenv("HOMBRACE_MAX_DEGREE", "0")
    r = runner.invoke(main, ["cohomology"] + _paths(fix) + ["--degree", "1"])
    assert r.exit_code == 2
    monkeypatch.delenv("HOMBRACE_MAX_DEGREE")
    r = runner.invoke(main, ["cohomology"] + _paths(fix) + ["--degree", "1"])
    assert r.exit_code == 0


def test_bracket_derived(runner, fix, tmp_path):
    c = tmp_path / "c.json"
    c.write_text(json.dumps({
        "kind": "cochain", "degree": 1, "module_dim": 3, "algebra_dim": 3,
        "coeffs": ["0", "0", "1", "0", "0", "2", "0", "0", "0"]}))
    out = tmp_path / "br.json"
    r = runner.invoke(main, ["bracket", "derived"]
                      + _paths(fix)[:4] + [str(c), str(c), "-o", str(out)])
    assert r.exit_code == 0, r.output
    data = json.loads(out.read_text())
    assert data["kind"] == "cochain" and data["degree"] == 2


def test_deform_obstruction_extensible(runner, tmp_path):
    """dim-1 instance written by hand: extension succeeds (H^2 = 0)."""
    a = tmp_path / "alg.json"
    m = tmp_path / "mod.json"
    t = tmp_path / "T.json"
    t1 = tmp_path / "T1.json"
    a.write_text(json.dumps({"kind": "hom-algebra", "field": "Q", "dim": 1,
                             "mu": [[["1"]]], "alpha": [["1"]]}))
    m.write_text(json.dumps({"kind": "bimodule", "algebra": "alg.json",
                             "dim": 1, "l": [[["1"]]], "r": [[["0"]]],
                             "phi": [["1"]]}))
    t.write_text(json.dumps({"kind": "map", "rows": 1, "cols": 1,
                             "entries": [["1"]]}))
    t1.write_text(json.dumps({"kind": "cochain", "degree": 1,
                              "module_dim": 1, "algebra_dim": 1,
                              "coeffs": ["1"]}))
    args = ["-a", str(a), "-m", str(m), "-t", str(t), "--terms", str(t1)]
    r = runner.invoke(main, ["deform", "verify"] + args)
    assert r.exit_code == 0, r.output
    theta = tmp_path / "theta.json"
    nxt = tmp_path / "Tnext.json"
    r = runner.invoke(main, ["deform", "obstruction"] + args
                      + ["--theta-out", str(theta), "--next-out", str(nxt)])
    assert r.exit_code == 0, r.output
    assert "extensible: yes" in r.output
    assert theta.exists() and nxt.exists()
    r = runner.invoke(main, ["nijenhuis", "element", "-a", str(a), "-m",
                             str(m), "-t", str(t), "-x", "1"])
    assert r.exit_code == 0
    r = runner.invoke(main, ["deform", "equivalence", "-a", str(a), "-m",
                             str(m), "-t", str(t), "--gen1", str(t1),
                             "--gen2", str(t1), "-x", "0"])
    assert r.exit_code == 0


def test_deform_obstruction_not_extensible(runner, fix, tmp_path):
    """On the (1,1) instance an obstructed cocycle reports extensible: no."""
    from homoper import cohomology as CH, deform as DF, fileio
    from homoper.examples import example25_instance
    from homoper.exlin import QQ
    T = example25_instance(QQ, 1, 1, 3, 5)
    term = None
    for zc in CH.cocycle_basis(T, 1, differential="dT"):
        if DF.extend(DF.DeformationSeries(T, [zc])) is None:
            term = zc
            break
    assert term is not None
    tpath = tmp_path / "t1.json"
    fileio.save_cochain(tpath, term)
    r = runner.invoke(main, ["deform", "extend"] + _paths(fix)
                      + ["--terms", str(tpath), "--next-out",
                         str(tmp_path / "n.json")])
    assert r.exit_code == 1
    assert "extensible: no" in r.output


def test_search_deterministic(runner, tmp_path):
    a = tmp_path / "alg.json"
    m = tmp_path / "mod.json"
    a.write_text(json.dumps({"kind": "hom-algebra", "field": "Fp:3", "dim": 1,
                             "mu": [[["1"]]], "alpha": [["1"]]}))
    m.write_text(json.dumps({"kind": "bimodule", "algebra": "alg.json",
                             "dim": 1, "l": [[["1"]]], "r": [[["0"]]],
                             "phi": [["1"]]}))
    r1 = runner.invoke(main, ["search", "-a", str(a), "-m", str(m)])
    r2 = runner.invoke(main, ["search", "-a", str(a), "-m", str(m)])
    assert r1.exit_code == 0 and r1.output == r2.output
    lines = [l for l in r1.output.splitlines() if l.startswith("{")]
    assert len(lines) == 3


def test_search_rejects_rationals(runner, fix):
    r = runner.invoke(main, ["search", "-a", str(fix / "algebra.json"),
                             "-m", str(fix / "bimodule.json")])
    assert r.exit_code == 2
