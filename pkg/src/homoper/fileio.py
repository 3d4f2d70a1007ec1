"""Canonical JSON interchange for algebras, bimodules, maps, cochains and
dendriform structures.

All field elements are serialized as strings (lowest-terms rationals over Q,
canonical representatives 0..p-1 over F_p), with a fixed key order so that
emitted fixtures double as golden test vectors.  Conventions: mu[i][j][k] is
the coefficient of e_k in e_i.e_j; alpha[k][i] is the coefficient of e_k in
alpha(e_i) (i.e. alpha is stored as a matrix, rows = output coordinates).
"""

from __future__ import annotations

import json
import os
from collections import OrderedDict

from .exlin import Field, Matrix, InputError
from .homcore import HomAlgebra, Bimodule, LinearMap
from .ooper import HomDendriform
from .cochain import Cochain


class FileFormatError(InputError):
    """Malformed interchange file; message carries the path and location."""


def _fail(path, msg):
    raise FileFormatError("%s: %s" % (path, msg))


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        _fail(path, "file not found")
    except json.JSONDecodeError as e:
        _fail(path, "invalid JSON at line %d column %d" % (e.lineno, e.colno))


def _need(path, data, key, typ=None):
    if key not in data:
        _fail(path, "missing key %r" % key)
    val = data[key]
    if typ is not None and not isinstance(val, typ):
        _fail(path, "key %r must be %s" % (key, typ.__name__))
    return val


def _expect_kind(path, data, kind):
    got = _need(path, data, "kind", str)
    if got != kind:
        _fail(path, "expected kind %r, found %r" % (kind, got))


def _parse_elem(path, field, s, where):
    try:
        return field.parse(s)
    except (InputError, ValueError) as e:
        _fail(path, "bad field element %r at %s: %s" % (s, where, e))


def _parse_matrix(path, field, data, rows, cols, what):
    if not isinstance(data, list) or len(data) != rows:
        _fail(path, "%s must be a %dx%d array" % (what, rows, cols))
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            _fail(path, "%s row %d must have %d entries" % (what, i, cols))
        out.append([_parse_elem(path, field, x, "%s[%d][%d]" % (what, i, j))
                    for j, x in enumerate(row)])
    return Matrix(field, out)


def _parse_tensor3(path, field, data, d1, d2, d3, what):
    if not isinstance(data, list) or len(data) != d1:
        _fail(path, "%s must be a %dx%dx%d array" % (what, d1, d2, d3))
    out = []
    for i, plane in enumerate(data):
        if not isinstance(plane, list) or len(plane) != d2:
            _fail(path, "%s[%d] must have %d rows" % (what, i, d2))
        rows = []
        for j, vec in enumerate(plane):
            if not isinstance(vec, list) or len(vec) != d3:
                _fail(path, "%s[%d][%d] must have %d entries" % (what, i, j, d3))
            rows.append([_parse_elem(path, field, x,
                                     "%s[%d][%d][%d]" % (what, i, j, k))
                         for k, x in enumerate(vec)])
        out.append(rows)
    return out


def _fmt_matrix(field, mat):
    return [[field.fmt(mat[i, j]) for j in range(mat.cols)]
            for i in range(mat.rows)]


def _fmt_tensor3(field, t):
    return [[[field.fmt(x) for x in vec] for vec in plane] for plane in t]


def _dump(path, data):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


# ---------------------------------------------------------------------------
# algebra

def load_algebra(path):
    data = _load_json(path)
    _expect_kind(path, data, "hom-algebra")
    field = Field.from_name(_need(path, data, "field", str))
    dim = _need(path, data, "dim", int)
    if dim < 1:
        _fail(path, "dim must be positive")
    mu = _parse_tensor3(path, field, _need(path, data, "mu"), dim, dim, dim, "mu")
    alpha = _parse_matrix(path, field, _need(path, data, "alpha"), dim, dim, "alpha")
    return HomAlgebra(field, mu, alpha)


def save_algebra(path, A):
    _dump(path, OrderedDict([
        ("kind", "hom-algebra"),
        ("field", A.field.name),
        ("dim", A.dim),
        ("mu", _fmt_tensor3(A.field, A.mu)),
        ("alpha", _fmt_matrix(A.field, A.alpha)),
    ]))


# ---------------------------------------------------------------------------
# bimodule

def load_bimodule(path, algebra=None):
    """The algebra path inside the file is resolved relative to the file."""
    data = _load_json(path)
    _expect_kind(path, data, "bimodule")
    if algebra is None:
        apath = _need(path, data, "algebra", str)
        if not os.path.isabs(apath):
            apath = os.path.join(os.path.dirname(os.path.abspath(path)), apath)
        algebra = load_algebra(apath)
    field = algebra.field
    m = _need(path, data, "dim", int)
    if m < 1:
        _fail(path, "dim must be positive")
    na = algebra.dim
    l = _parse_tensor3(path, field, _need(path, data, "l"), na, m, m, "l")
    r = _parse_tensor3(path, field, _need(path, data, "r"), m, na, m, "r")
    phi = _parse_matrix(path, field, _need(path, data, "phi"), m, m, "phi")
    return Bimodule(algebra, l, r, phi, dim=m)


def save_bimodule(path, M, algebra_path):
    field = M.field
    _dump(path, OrderedDict([
        ("kind", "bimodule"),
        ("algebra", algebra_path),
        ("dim", M.dim),
        ("l", _fmt_tensor3(field, M.l)),
        ("r", _fmt_tensor3(field, M.r)),
        ("phi", _fmt_matrix(field, M.phi)),
    ]))


# ---------------------------------------------------------------------------
# linear map

def load_map(path, field):
    data = _load_json(path)
    _expect_kind(path, data, "map")
    rows = _need(path, data, "rows", int)
    cols = _need(path, data, "cols", int)
    mat = _parse_matrix(path, field, _need(path, data, "entries"),
                        rows, cols, "entries")
    return LinearMap(field, mat)


def save_map(path, lm):
    field = lm.field
    _dump(path, OrderedDict([
        ("kind", "map"),
        ("rows", lm.matrix.rows),
        ("cols", lm.matrix.cols),
        ("entries", _fmt_matrix(field, lm.matrix)),
    ]))


# ---------------------------------------------------------------------------
# cochain

def load_cochain(path, field):
    data = _load_json(path)
    _expect_kind(path, data, "cochain")
    degree = _need(path, data, "degree", int)
    m = _need(path, data, "module_dim", int)
    na = _need(path, data, "algebra_dim", int)
    if degree < 0 or m < 1 or na < 1:
        _fail(path, "degree must be >= 0 and dims positive")
    coeffs = _need(path, data, "coeffs", list)
    size = (m ** degree) * na
    if len(coeffs) != size:
        _fail(path, "coeffs must have %d entries, found %d" % (size, len(coeffs)))
    flat = [_parse_elem(path, field, x, "coeffs[%d]" % i)
            for i, x in enumerate(coeffs)]
    return Cochain.unflatten(field, degree, m, na, flat)


def save_cochain(path, f):
    field = f.field
    _dump(path, OrderedDict([
        ("kind", "cochain"),
        ("degree", f.degree),
        ("module_dim", f.src_dim),
        ("algebra_dim", f.tgt_dim),
        ("coeffs", [field.fmt(x) for x in f.flatten()]),
    ]))


# ---------------------------------------------------------------------------
# dendriform

def load_dendriform(path):
    data = _load_json(path)
    _expect_kind(path, data, "hom-dendriform")
    field = Field.from_name(_need(path, data, "field", str))
    dim = _need(path, data, "dim", int)
    if dim < 1:
        _fail(path, "dim must be positive")
    prec = _parse_tensor3(path, field, _need(path, data, "prec"),
                          dim, dim, dim, "prec")
    succ = _parse_tensor3(path, field, _need(path, data, "succ"),
                          dim, dim, dim, "succ")
    phi = _parse_matrix(path, field, _need(path, data, "phi"), dim, dim, "phi")
    return HomDendriform(field, prec, succ, phi)


def save_dendriform(path, D):
    field = D.field
    _dump(path, OrderedDict([
        ("kind", "hom-dendriform"),
        ("field", field.name),
        ("dim", D.dim),
        ("prec", _fmt_tensor3(field, D.prec)),
        ("succ", _fmt_tensor3(field, D.succ)),
        ("phi", _fmt_matrix(field, D.phi)),
    ]))
