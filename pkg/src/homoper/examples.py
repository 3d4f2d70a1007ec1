"""Fixture builders: the two-parameter 3-dimensional algebra family with its
Rota-Baxter operators, small oracle instances with hand-computable
cohomology, and an exhaustive finite-field search for O-operators.

These back both the `example`/`search` CLI subcommands and the test corpus.
"""

from __future__ import annotations

from itertools import product as iproduct

from .exlin import QQ, GF, Matrix, InputError, basis_vec
from .homcore import HomAlgebra, Bimodule, LinearMap, adjoint_bimodule
from .ooper import OOperator, verify_o_operator


def example25(field, a, b):
    """3-dimensional family: x1 acts as scaled unit, with
    x1.x1 = a x1, x1.x2 = x2.x1 = x2.x2 = a x2,
    x1.x3 = x3.x1 = x2.x3 = b x3, alpha = diag(a, a, b).

    Hom-associative for all a, b; associative iff (a - b) b = 0.
    """
    a, b = field(a), field(b)
    z = field.zero
    mu = [[[z] * 3 for _ in range(3)] for _ in range(3)]
    for (i, j, k, c) in [(0, 0, 0, a), (0, 1, 1, a), (1, 0, 1, a),
                         (1, 1, 1, a), (0, 2, 2, b), (2, 0, 2, b),
                         (1, 2, 2, b)]:
        mu[i][j][k] = c
    alpha = Matrix(field, [[a, z, z], [z, a, z], [z, z, b]])
    return HomAlgebra(field, mu, alpha)


def example25_rb(field, rho1, rho2):
    """R(x1) = rho1 x3, R(x2) = rho2 x3, R(x3) = 0: Rota-Baxter on the
    example25 family for every (rho1, rho2)."""
    z = field.zero
    ent = [[z] * 3 for _ in range(3)]
    ent[2][0] = field(rho1)
    ent[2][1] = field(rho2)
    return LinearMap(field, Matrix(field, ent))


def example25_instance(field, a, b, rho1, rho2, force=False):
    A = example25(field, a, b)
    M = adjoint_bimodule(A)
    return OOperator(A, M, example25_rb(field, rho1, rho2), force=force)


def dim1_oracle(field=QQ):
    """A = <e> with e.e = e; M = <f> with l(e,f) = f, r = 0; T(f) = e.
    All twists are the identity.  H^0 = H^1 = H^2 = 0 by hand."""
    one, zero = field.one, field.zero
    A = HomAlgebra(field, [[[one]]], Matrix(field, [[one]]))
    M = Bimodule(A, [[[one]]], [[[zero]]], Matrix(field, [[one]]), dim=1)
    return OOperator(A, M, LinearMap(field, Matrix(field, [[one]])))


def trivial_instance(field=QQ):
    """Zero product, zero actions, zero operator: H^n is everything,
    dim H^n = 1 at every degree for the 1|1-dimensional case."""
    zero, one = field.zero, field.one
    A = HomAlgebra(field, [[[zero]]], Matrix(field, [[one]]))
    M = Bimodule(A, [[[zero]]], [[[zero]]], Matrix(field, [[one]]), dim=1)
    return OOperator(A, M, LinearMap(field, Matrix(field, [[zero]])))


def dim12_instance(field=QQ):
    """A = <e> (e.e = e, alpha = id); M of dimension 2 with a non-diagonal
    twist phi = [[1,1],[0,2]], left action l(e, u) = phi(u), right action
    zero, T = (1, -1).  Twist-compatible with a genuinely non-scalar phi."""
    one, zero = field.one, field.zero
    A = HomAlgebra(field, [[[one]]], Matrix(field, [[one]]))
    phi = Matrix(field, [[one, one], [zero, field(2)]])
    l = [[list(phi.column(u)) for u in range(2)]]
    r = [[[zero] * 2] for _ in range(2)]
    M = Bimodule(A, l, r, phi, dim=2)
    return OOperator(A, M, LinearMap(field, Matrix(field, [[one, field(-1)]])))


def search_o_operators(A, M, strict=False):
    """Exhaustively enumerate maps T: M -> A over a finite field and yield
    those passing verify_o_operator, in deterministic (odometer) order.

    strict=True additionally requires twist-compatibility.
    """
    field = A.field
    if field.is_rational:
        raise InputError("exhaustive search needs a finite field")
    n = A.dim * M.dim
    if field.char ** n > 100000:
        raise InputError("search space %d^%d too large" % (field.char, n))
    for vals in iproduct(range(field.char), repeat=n):
        ent = [[field(vals[i * M.dim + u]) for u in range(M.dim)]
               for i in range(A.dim)]
        T = LinearMap(field, Matrix(field, ent))
        rep = verify_o_operator(A, M, T)
        if rep.ok and (not strict or not rep.warnings):
            yield T


def _f7_search_instances():
    """Small F_7 algebra/bimodule pairs (dims <= 2) used as search domains."""
    F7 = GF(7)
    one, zero = F7.one, F7.zero
    out = []
    # (a) dim-1 pair, l(e,f) = f, r = 0
    A = HomAlgebra(F7, [[[one]]], Matrix(F7, [[one]]))
    M = Bimodule(A, [[[one]]], [[[zero]]], Matrix(F7, [[one]]), dim=1)
    out.append(("f7-1x1", A, M))
    # (b) zero-product dim-1 algebra with trivial module of dim 2
    # (every T is an O-operator: both sides of the product identity vanish)
    A0 = HomAlgebra(F7, [[[zero]]], Matrix(F7, [[one]]))
    M2 = Bimodule(A0, [[[zero, zero], [zero, zero]]],
                  [[[zero, zero]], [[zero, zero]]],
                  Matrix(F7, [[one, zero], [zero, one]]), dim=2)
    out.append(("f7-1x2-trivial", A0, M2))
    # (c) dim12 over F7
    out.append(("f7-dim12", dim12_instance(F7).algebra, dim12_instance(F7).module))
    # (d) dim-2 algebra e1 unit-like on e2: e1.e1 = e1, e1.e2 = e2.e1 = e2
    mu = [[[one, zero], [zero, one]], [[zero, one], [zero, zero]]]
    A2 = HomAlgebra(F7, mu, Matrix.identity(F7, 2))
    out.append(("f7-2x2-adjoint", A2, adjoint_bimodule(A2)))
    return out


def corpus():
    """Named O-operator instances exercised by the property tests.

    Returns a list of (name, OOperator); every entry passes the product
    identity, and entries whose name carries the "coh" tag are additionally
    usable for cohomology (twist-compatible, twist maps multiplicative).
    """
    F7 = GF(7)
    out = [
        ("dim1-oracle[coh]", dim1_oracle(QQ)),
        ("dim1-oracle-f7[coh]", dim1_oracle(F7)),
        ("trivial[coh]", trivial_instance(QQ)),
        ("dim12[coh]", dim12_instance(QQ)),
        ("dim12-f7[coh]", dim12_instance(F7)),
        ("ex25-q-1-2-rb(3,5)", example25_instance(QQ, 1, 2, 3, 5)),
        ("ex25-q-1-2-rb(1,0)", example25_instance(QQ, 1, 2, 1, 0)),
        ("ex25-q-1-1-rb(3,5)[coh]", example25_instance(QQ, 1, 1, 3, 5)),
        ("ex25-f7-1-3-rb(2,6)", example25_instance(F7, 1, 3, 2, 6)),
        ("ex25-f7-1-1-rb(2,6)[coh]", example25_instance(F7, 1, 1, 2, 6)),
    ]
    # a couple of searched instances for variety (first nonzero hits)
    for name, A, M in _f7_search_instances()[:2]:
        hits = []
        for T in search_o_operators(A, M, strict=True):
            if not T.matrix.is_zero():
                hits.append(T)
            if len(hits) == 2:
                break
        for i, T in enumerate(hits):
            out.append(("%s-search%d[coh]" % (name, i), OOperator(A, M, T)))
    return out


def cohomology_corpus():
    return [(n, T) for (n, T) in corpus() if "[coh]" in n]
