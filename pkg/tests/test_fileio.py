"""Interchange files: canonical round-trips and error positions."""

import json

import pytest

from homoper.exlin import QQ, GF
from homoper.homcore import adjoint_bimodule, LinearMap
from homoper import cochain as CC
from homoper import fileio
from homoper.examples import (example25, example25_rb, dim12_instance)
from homoper.ooper import induced_dendriform


def test_algebra_roundtrip_canonical(tmp_path):
    A = example25(QQ, 1, 2)
    p1 = tmp_path / "a.json"
    p2 = tmp_path / "a2.json"
    fileio.save_algebra(p1, A)
    A2 = fileio.load_algebra(p1)
    assert A2.mu == A.mu and A2.alpha == A.alpha and A2.field == A.field
    fileio.save_algebra(p2, A2)
    assert p1.read_bytes() == p2.read_bytes()


def test_bimodule_roundtrip_with_relative_algebra(tmp_path):
    A = example25(QQ, 1, 2)
    M = adjoint_bimodule(A)
    sub = tmp_path / "sub"
    sub.mkdir()
    fileio.save_algebra(sub / "alg.json", A)
    fileio.save_bimodule(sub / "mod.json", M, "alg.json")
    M2 = fileio.load_bimodule(sub / "mod.json")
    assert M2.l == M.l and M2.r == M.r and M2.phi == M.phi


def test_map_and_cochain_roundtrip(tmp_path):
    R = example25_rb(QQ, 3, 5)
    fileio.save_map(tmp_path / "m.json", R)
    R2 = fileio.load_map(tmp_path / "m.json", QQ)
    assert R2.matrix == R.matrix
    f = CC.Cochain.unflatten(QQ, 2, 2, 3,
                             [QQ(i) / QQ(3) for i in range(12)])
    fileio.save_cochain(tmp_path / "c.json", f)
    f2 = fileio.load_cochain(tmp_path / "c.json", QQ)
    assert f2 == f


def test_dendriform_roundtrip(tmp_path):
    T = dim12_instance(QQ)
    D = induced_dendriform(T.algebra, T.module, T.T)
    fileio.save_dendriform(tmp_path / "d.json", D)
    D2 = fileio.load_dendriform(tmp_path / "d.json")
    assert D2.prec == D.prec and D2.succ == D.succ and D2.phi == D.phi


def test_fp_serialization(tmp_path):
    F7 = GF(7)
    A = example25(F7, 1, 3)
    fileio.save_algebra(tmp_path / "a.json", A)
    data = json.loads((tmp_path / "a.json").read_text())
    assert data["field"] == "Fp:7"
    A2 = fileio.load_algebra(tmp_path / "a.json")
    assert A2.field == F7 and A2.mu == A.mu


def test_missing_file_and_bad_json(tmp_path):
    with pytest.raises(fileio.FileFormatError, match="not found"):
        fileio.load_algebra(tmp_path / "nope.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    with pytest.raises(fileio.FileFormatError, match="line 1"):
        fileio.load_algebra(bad)


def test_schema_errors(tmp_path):
    p = tmp_path / "x.json"
    p.write_text(json.dumps({"kind": "map", "rows": 1, "cols": 1}))
    with pytest.raises(fileio.FileFormatError, match="entries"):
        fileio.load_map(p, QQ)
    p.write_text(json.dumps({"kind": "hom-algebra", "field": "Q", "dim": 1,
                             "mu": [[["x"]]], "alpha": [["1"]]}))
    with pytest.raises(fileio.FileFormatError, match="mu\\[0\\]\\[0\\]\\[0\\]"):
        fileio.load_algebra(p)
    p.write_text(json.dumps({"kind": "cochain", "degree": 1, "module_dim": 2,
                             "algebra_dim": 1, "coeffs": ["1"]}))
    with pytest.raises(fileio.FileFormatError, match="2 entries"):
        fileio.load_cochain(p, QQ)
    p.write_text(json.dumps({"kind": "bimodule"}))
    with pytest.raises(fileio.FileFormatError, match="expected kind"):
        fileio.load_algebra(p)


def test_lowest_terms(tmp_path):
    f = CC.Cochain(QQ, 0, 1, 1, [[QQ.parse("4/6")]])
    fileio.save_cochain(tmp_path / "c.json", f)
    data = json.loads((tmp_path / "c.json").read_text())
    assert data["coeffs"] == ["2/3"]
