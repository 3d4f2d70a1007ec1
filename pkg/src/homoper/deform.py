"""Infinitesimal, order-n and (truncated) formal deformations of an
O-operator, Nijenhuis elements, equivalences, obstruction classes and
extensions.

Conventions: a deformation series T_t = T + t T_1 + ... + t^n T_n is a
finite list of degree-1 cochains, each twist-compatible; "formal"
statements are checked modulo t^{k+1}.  Generators may be passed as
degree-1 Cochains or as LinearMaps.
"""

from __future__ import annotations

from itertools import product as iproduct

from .exlin import (Matrix, InputError, DomainError,
                    vec_add, vec_sub, vec_is_zero, basis_vec, zero_vec, span_dim)
from .homcore import LinearMap, Report
from .ooper import OOperator, verify_o_operator, induced_dendriform
from . import cochain as CC
from . import cohomology as CH


def _as_linmap(T, gen):
    if isinstance(gen, LinearMap):
        return gen
    if isinstance(gen, CC.Cochain):
        if gen.degree != 1:
            raise InputError("generator must have degree 1")
        return gen.to_linear_map()
    raise InputError("generator must be a Cochain or LinearMap")


def _as_cochain(T, gen):
    if isinstance(gen, CC.Cochain):
        return gen
    return CC.Cochain.from_linear_map(gen)


# ---------------------------------------------------------------------------
# infinitesimal deformations

def verify_infinitesimal(T, gen):
    """T + t.gen is an O-operator for all t iff:

      (1) gen.phi = alpha.gen
      (2) T(u).gen(v) + gen(u).T(v)
            = T(r(u,gen(v)) + l(gen(u),v)) + gen(r(u,T(v)) + l(T(u),v))
      (3) gen(u).gen(v) = gen(r(u,gen(v)) + l(gen(u),v))

    (2) says d_T(gen) = 0; (1) and (3) say gen is itself an O-operator.
    """
    A, M = T.algebra, T.module
    fld = A.field
    G = _as_linmap(T, gen)
    rep = Report()
    comm = G.matrix * M.phi - A.alpha * G.matrix
    for j in range(M.dim):
        col = comm.column(j)
        if not vec_is_zero(fld, col):
            rep.add("lin-def-1", (j,), col)
    mb = [basis_vec(fld, M.dim, u) for u in range(M.dim)]
    for u in range(M.dim):
        for v in range(M.dim):
            Tu, Tv = T.T(mb[u]), T.T(mb[v])
            Gu, Gv = G(mb[u]), G(mb[v])
            lhs2 = vec_add(A.product(Tu, Gv), A.product(Gu, Tv))
            rhs2 = vec_add(
                T.T(vec_add(M.right(mb[u], Gv), M.left(Gu, mb[v]))),
                G(vec_add(M.right(mb[u], Tv), M.left(Tu, mb[v]))))
            d2 = vec_sub(lhs2, rhs2)
            if not vec_is_zero(fld, d2):
                rep.add("lin-def-2", (u, v), d2)
            lhs3 = A.product(Gu, Gv)
            rhs3 = G(vec_add(M.right(mb[u], Gv), M.left(Gu, mb[v])))
            d3 = vec_sub(lhs3, rhs3)
            if not vec_is_zero(fld, d3):
                rep.add("lin-def-3", (u, v), d3)
    return rep


def induced_dendriform_deformation(T, gen):
    """Deformed dendriform pair on M:

        u prec_t v = r(u, T(v)) + t r(u, gen(v)),
        u succ_t v = l(T(u), v) + t l(gen(u), v)

    Returns (omega_prec, omega_succ, report) where the omegas are the
    t-coefficients as m x m tables of vectors and the report checks the
    three Hom-dendriform identities coefficient-wise in t (degrees 1, 2;
    degree 0 is the undeformed structure).
    """
    if not verify_infinitesimal(T, gen).ok:
        raise DomainError("gen does not generate an infinitesimal deformation")
    A, M = T.algebra, T.module
    fld = A.field
    m = M.dim
    G = _as_linmap(T, gen)
    mb = [basis_vec(fld, m, u) for u in range(m)]
    D = induced_dendriform(A, M, T.T, force=True)
    w_prec = [[M.right(mb[u], G(mb[v])) for v in range(m)] for u in range(m)]
    w_succ = [[M.left(G(mb[u]), mb[v]) for v in range(m)] for u in range(m)]

    def prec(k, a, b):
        # t^k coefficient of prec_t on coordinate vectors
        if k == 0:
            return D.lt(a, b)
        return _bil(fld, w_prec, a, b)

    def succ(k, a, b):
        if k == 0:
            return D.gt(a, b)
        return _bil(fld, w_succ, a, b)

    def star(k, a, b):
        return vec_add(prec(k, a, b), succ(k, a, b))

    rep = Report()
    phi = M.phi
    for i in range(m):
        for j in range(m):
            for k in range(m):
                x, y, z = mb[i], mb[j], mb[k]
                for deg in (1, 2):
                    # (x < y) < phi z = phi x < (y * z)
                    d1 = zero_vec(fld, m)
                    d2 = zero_vec(fld, m)
                    d3 = zero_vec(fld, m)
                    for a in range(deg + 1):
                        b = deg - a
                        if a > 1 or b > 1:
                            continue
                        d1 = vec_add(d1, vec_sub(
                            prec(a, prec(b, x, y), phi.apply(z)),
                            prec(a, phi.apply(x), star(b, y, z))))
                        d2 = vec_add(d2, vec_sub(
                            prec(a, succ(b, x, y), phi.apply(z)),
                            succ(a, phi.apply(x), prec(b, y, z))))
                        d3 = vec_add(d3, vec_sub(
                            succ(a, star(b, x, y), phi.apply(z)),
                            succ(a, phi.apply(x), succ(b, y, z))))
                    if not vec_is_zero(fld, d1):
                        rep.add("dendriform-1-t%d" % deg, (i, j, k), d1)
                    if not vec_is_zero(fld, d2):
                        rep.add("dendriform-2-t%d" % deg, (i, j, k), d2)
                    if not vec_is_zero(fld, d3):
                        rep.add("dendriform-3-t%d" % deg, (i, j, k), d3)
    return w_prec, w_succ, rep


def _bil(field, table, a, b):
    out = zero_vec(field, len(table[0][0]))
    for i, ai in enumerate(a):
        if ai == field.zero:
            continue
        for j, bj in enumerate(b):
            if bj == field.zero:
                continue
            out = vec_add(out, [ai * bj * c for c in table[i][j]])
    return out


# ---------------------------------------------------------------------------
# Nijenhuis elements

def _commutator_with(A, x, y):
    return A.commutator(x, y)


def verify_nijenhuis_element(T, x):
    """x in A with alpha(x) = x and, for all basis y, z in A and u in M:

      (1) (xy - yx)(xz - zx) = 0
      (2) x.w - w.x = 0 where w = l_T(u,x) - r_T(x,u)
      (3) l(xy - yx, l(x,u) - r(u,x)) = 0
      (4) r(l(x,u) - r(u,x), xy - yx) = 0
    """
    A, M = T.algebra, T.module
    fld = A.field
    x = list(x)
    rep = Report()
    fx = vec_sub(A.twist(x), x)
    if not vec_is_zero(fld, fx):
        rep.add("fixed-point", (), fx)
    ab = [basis_vec(fld, A.dim, i) for i in range(A.dim)]
    mb = [basis_vec(fld, M.dim, u) for u in range(M.dim)]
    comms = [A.commutator(x, y) for y in ab]
    for i in range(A.dim):
        for j in range(A.dim):
            d = A.product(comms[i], comms[j])
            if not vec_is_zero(fld, d):
                rep.add("nijenhuis-1", (i, j), d)
    for u in range(M.dim):
        # w = l_T(u, x) - r_T(x, u)
        #   = T(u).x - T(r(u,x)) - x.T(u) + T(l(x,u))
        Tu = T.T(mb[u])
        w = vec_sub(A.product(Tu, x), T.T(M.right(mb[u], x)))
        w = vec_sub(w, A.product(x, Tu))
        w = vec_add(w, T.T(M.left(x, mb[u])))
        d = A.commutator(x, w)
        if not vec_is_zero(fld, d):
            rep.add("nijenhuis-2", (u,), d)
    for i in range(A.dim):
        for u in range(M.dim):
            rho = vec_sub(M.left(x, mb[u]), M.right(mb[u], x))
            d3 = M.left(comms[i], rho)
            if not vec_is_zero(fld, d3):
                rep.add("nijenhuis-3", (i, u), d3)
            d4 = M.right(rho, comms[i])
            if not vec_is_zero(fld, d4):
                rep.add("nijenhuis-4", (i, u), d4)
    return rep


def hom_lie_nijenhuis_comparison(T, x):
    """x is then a Nijenhuis element for T on the commutator Hom-Lie algebra:

      [[x,y],[x,z]] = 0,   rho([x,y]).rho(x) = 0,   [x, T(rho(x)v) + [Tv,x]] = 0

    with [a,b] = ab - ba and rho(a)u = l(a,u) - r(u,a).
    """
    A, M = T.algebra, T.module
    fld = A.field
    x = list(x)
    rep = Report()
    ab = [basis_vec(fld, A.dim, i) for i in range(A.dim)]
    mb = [basis_vec(fld, M.dim, u) for u in range(M.dim)]

    def rho(a, u):
        return vec_sub(M.left(a, u), M.right(u, a))

    comms = [A.commutator(x, y) for y in ab]
    for i in range(A.dim):
        for j in range(A.dim):
            d = A.commutator(comms[i], comms[j])
            if not vec_is_zero(fld, d):
                rep.add("homlie-1", (i, j), d)
    for i in range(A.dim):
        for u in range(M.dim):
            d = rho(comms[i], rho(x, mb[u]))
            if not vec_is_zero(fld, d):
                rep.add("homlie-2", (i, u), d)
    for u in range(M.dim):
        inner = vec_add(T.T(rho(x, mb[u])), A.commutator(T.T(mb[u]), x))
        d = A.commutator(x, inner)
        if not vec_is_zero(fld, d):
            rep.add("homlie-3", (u,), d)
    return rep


def trivial_deformation_from(T, x):
    """gen = d_H(x) for a Nijenhuis element x; T + t.gen is a trivial
    infinitesimal deformation."""
    rep = verify_nijenhuis_element(T, x)
    if not rep.ok:
        raise DomainError("x is not a Nijenhuis element:\n%s" % rep)
    a = CC.Cochain(T.field, 0, T.module.dim, T.algebra.dim, [list(x)])
    return CC.d_H(T, a)


def verify_equivalence_infinitesimal(T, gen1, gen2, x):
    """The pair (id + t(L_x - R_x), id + t(l_x - r_x)) is a morphism of
    O-operators from T + t.gen1 to T + t.gen2: checks alpha(x) = x and the
    five expanded coefficient conditions."""
    A, M = T.algebra, T.module
    fld = A.field
    x = list(x)
    G1 = _as_linmap(T, gen1)
    G2 = _as_linmap(T, gen2)
    rep = Report()
    fx = vec_sub(A.twist(x), x)
    if not vec_is_zero(fld, fx):
        rep.add("fixed-point", (), fx)
    ab = [basis_vec(fld, A.dim, i) for i in range(A.dim)]
    mb = [basis_vec(fld, M.dim, u) for u in range(M.dim)]
    comms = [A.commutator(x, y) for y in ab]
    # (i) at t^2: (xy-yx)(xz-zx) = 0
    for i in range(A.dim):
        for j in range(A.dim):
            d = A.product(comms[i], comms[j])
            if not vec_is_zero(fld, d):
                rep.add("comm-comm-zero", (i, j), d)
    for u in range(M.dim):
        rho = vec_sub(M.left(x, mb[u]), M.right(mb[u], x))
        Tu = T.T(mb[u])
        # (iii) at t: gen1(u) - gen2(u) = T(rho(u)) - [x, T(u)]
        d1 = vec_sub(vec_sub(G1(mb[u]), G2(mb[u])),
                     vec_sub(T.T(rho), A.commutator(x, Tu)))
        if not vec_is_zero(fld, d1):
            rep.add("1-cocycle-linear", (u,), d1)
        # (iii) at t^2: [x, gen1(u)] = gen2(rho(u))
        d2 = vec_sub(A.commutator(x, G1(mb[u])), G2(rho))
        if not vec_is_zero(fld, d2):
            rep.add("T1-T2", (u,), d2)
    # (iv), (v) at t^2
    for i in range(A.dim):
        for u in range(M.dim):
            rho = vec_sub(M.left(x, mb[u]), M.right(mb[u], x))
            d3 = M.left(comms[i], rho)
            if not vec_is_zero(fld, d3):
                rep.add("ll-lr", (i, u), d3)
            d4 = M.right(rho, comms[i])
            if not vec_is_zero(fld, d4):
                rep.add("rl-rr", (i, u), d4)
    return rep


def search_equivalence_witness(T, gen1, gen2, grid=2):
    """Best-effort witness search: solve the linear condition
    (1-cocycle-linear) for x with alpha(x) = x, then filter the affine
    solution set through the quadratic conditions — exhaustively over F_p,
    by a bounded grid scan over Q."""
    A, M = T.algebra, T.module
    fld = A.field
    G1 = _as_linmap(T, gen1)
    G2 = _as_linmap(T, gen2)
    mb = [basis_vec(fld, M.dim, u) for u in range(M.dim)]
    # unknown x in A: rows = M.dim * A.dim (linear condition) + A.dim (fixed pt)
    cols = []
    rhs = []
    for j in range(A.dim):
        e = basis_vec(fld, A.dim, j)
        col = []
        for u in range(M.dim):
            rho = vec_sub(M.left(e, mb[u]), M.right(mb[u], e))
            col.extend(vec_sub(T.T(rho), A.commutator(e, T.T(mb[u]))))
        col.extend(vec_sub(A.twist(e), e))
        cols.append(col)
    for u in range(M.dim):
        rhs.extend(vec_sub(G1(mb[u]), G2(mb[u])))
    rhs.extend(zero_vec(fld, A.dim))
    mat = Matrix.from_columns(fld, cols)
    sol = mat.solve_affine(rhs)
    if sol is None:
        return None
    x0, kernel = sol

    def candidates():
        if not kernel:
            yield x0
            return
        if fld.is_rational:
            rng = range(-grid, grid + 1)
        else:
            rng = range(fld.char)
        for coeffs in iproduct(rng, repeat=len(kernel)):
            x = list(x0)
            for c, k in zip(coeffs, kernel):
                if c:
                    x = vec_add(x, [fld(c) * t for t in k])
            yield x

    for x in candidates():
        if verify_equivalence_infinitesimal(T, gen1, gen2, x).ok:
            return x
    return None


# ---------------------------------------------------------------------------
# order-n deformations

class DeformationSeries:
    """T_t = T + t T_1 + ... + t^n T_n (terms stored as degree-1 cochains)."""

    def __init__(self, base, terms):
        if not isinstance(base, OOperator):
            raise InputError("base must be a verified OOperator")
        self.base = base
        self.terms = [_as_cochain(base, t) for t in terms]
        for t in self.terms:
            if t.degree != 1 or t.src_dim != base.module.dim \
                    or t.tgt_dim != base.algebra.dim:
                raise InputError("series terms must be degree-1 cochains M -> A")

    @property
    def order(self):
        return len(self.terms)

    def term_map(self, i):
        """T_i as a LinearMap; i = 0 gives the base operator."""
        if i == 0:
            return self.base.T
        return self.terms[i - 1].to_linear_map()

    def extended(self, term):
        return DeformationSeries(self.base, self.terms + [_as_cochain(self.base, term)])


def verify_order_n(series):
    """The k-th coefficient equations for k = 0..n, plus twist-compatibility
    of every term (formal def 1)."""
    T = series.base
    A, M = T.algebra, T.module
    fld = A.field
    rep = Report()
    maps = [series.term_map(i) for i in range(series.order + 1)]
    for i, G in enumerate(maps):
        comm = G.matrix * M.phi - A.alpha * G.matrix
        for j in range(M.dim):
            col = comm.column(j)
            if not vec_is_zero(fld, col):
                if i == 0:
                    rep.add("formal-def-1", (i, j), col, warning=True)
                else:
                    rep.add("formal-def-1", (i, j), col)
    mb = [basis_vec(fld, M.dim, u) for u in range(M.dim)]
    for k in range(series.order + 1):
        for u in range(M.dim):
            for v in range(M.dim):
                acc = zero_vec(fld, A.dim)
                for i in range(k + 1):
                    j = k - i
                    Ti, Tj = maps[i], maps[j]
                    lhs = A.product(Ti(mb[u]), Tj(mb[v]))
                    inner = vec_add(M.left(Tj(mb[u]), mb[v]),
                                    M.right(mb[u], Tj(mb[v])))
                    acc = vec_add(acc, vec_sub(lhs, Ti(inner)))
                if not vec_is_zero(fld, acc):
                    rep.add("order-%d" % k, (u, v), acc)
    return rep


def obstruction(series):
    """Theta = -1/2 sum_{i+j=n+1, i,j>=1} [[T_i, T_j]]; a d_T-2-cocycle whose
    class obstructs extension to order n+1."""
    rep = verify_order_n(series)
    if not rep.ok:
        raise DomainError("not a valid order-%d deformation:\n%s"
                          % (series.order, rep))
    T = series.base
    A, M = T.algebra, T.module
    fld = A.field
    n = series.order
    theta = CC.Cochain.zero(fld, 2, M.dim, A.dim)
    for i in range(1, n + 1):
        j = n + 1 - i
        if j < 1 or j > n:
            continue
        theta = theta + CC.derived_bracket(A, M, series.terms[i - 1],
                                           series.terms[j - 1])
    half = fld.one / fld(2)
    return theta.scale(-half)


def extend(series):
    """Solve d_T X = Theta over the compatible degree-1 space and return a
    term X such that the extended series verifies at order n+1, or None.

    Direct re-verification of the extended series is the normative
    contract (it also absorbs the paper's sign discrepancy between
    "Theta = -d_T T_{n+1}" and the extension equation).
    """
    T = series.base
    theta = obstruction(series)
    w = CH.is_coboundary(T, theta, differential="dT")
    if w is None:
        return None
    for cand in (w, -w):
        if verify_order_n(series.extended(cand)).ok:
            return cand
    return None


def rigidity_probe(T, candidates):
    """Compare Z^1 with span{d_H(x)} over the given Nijenhuis elements.

    Returns (dim Z^1, dim span, verdict) with verdict "rigid" when the spans
    coincide (sufficient condition only), else "inconclusive".
    """
    fld = T.field
    for x in candidates:
        rep = verify_nijenhuis_element(T, x)
        if not rep.ok:
            raise DomainError("candidate is not a Nijenhuis element:\n%s" % rep)
    z1 = CH.cocycle_basis(T, 1)
    size = T.module.dim * T.algebra.dim
    flats = []
    for x in candidates:
        g = trivial_deformation_from(T, x)
        cand = flats + [g.flatten()]
        if span_dim(fld, cand, size) > len(flats):
            flats.append(g.flatten())
    verdict = "rigid" if len(flats) == len(z1) else "inconclusive"
    return len(z1), len(flats), verdict


# ---------------------------------------------------------------------------
# formal equivalence (truncated)

class EquivalenceWitness:
    """x plus optional higher maps f_i: A -> A, g_i: M -> M (i >= 2)."""

    def __init__(self, x, higher_f=None, higher_g=None):
        self.x = list(x)
        self.higher_f = list(higher_f or [])
        self.higher_g = list(higher_g or [])

    def f_coeff(self, A, i):
        fld = A.field
        if i == 0:
            return Matrix.identity(fld, A.dim)
        if i == 1:
            cols = [vec_sub(A.product(self.x, basis_vec(fld, A.dim, j)),
                            A.product(basis_vec(fld, A.dim, j), self.x))
                    for j in range(A.dim)]
            return Matrix.from_columns(fld, cols)
        idx = i - 2
        if idx < len(self.higher_f):
            f = self.higher_f[idx]
            return f.matrix if isinstance(f, LinearMap) else f
        return Matrix.zeros(fld, A.dim, A.dim)

    def g_coeff(self, M, i):
        fld = M.field
        if i == 0:
            return Matrix.identity(fld, M.dim)
        if i == 1:
            cols = [vec_sub(M.left(self.x, basis_vec(fld, M.dim, u)),
                            M.right(basis_vec(fld, M.dim, u), self.x))
                    for u in range(M.dim)]
            return Matrix.from_columns(fld, cols)
        idx = i - 2
        if idx < len(self.higher_g):
            g = self.higher_g[idx]
            return g.matrix if isinstance(g, LinearMap) else g
        return Matrix.zeros(fld, M.dim, M.dim)


def verify_formal_equivalence(series1, series2, witness, order):
    """(f_t, g_t) is a morphism of O-operators from T_t to Tbar_t modulo
    t^{order+1}: checks, coefficient-wise in t,

      Tbar_t . g_t = f_t . T_t,   f_t(y z) = f_t(y) f_t(z),
      g_t(l(y,u)) = l(f_t y, g_t u),   g_t(r(u,y)) = r(g_t u, f_t y),
      f_t alpha = alpha f_t,   g_t phi = phi g_t.
    """
    T = series1.base
    A, M = T.algebra, T.module
    fld = A.field
    if series2.base is not T and series2.base.T.matrix != T.T.matrix:
        raise InputError("both series must deform the same base operator")
    rep = Report()
    fx = vec_sub(A.twist(witness.x), witness.x)
    if not vec_is_zero(fld, fx):
        rep.add("fixed-point", (), fx)
    F = [witness.f_coeff(A, i) for i in range(order + 1)]
    G = [witness.g_coeff(M, i) for i in range(order + 1)]

    def term1(series, i):
        if i <= series.order:
            return series.term_map(i).matrix
        return Matrix.zeros(fld, A.dim, M.dim)

    # Tbar_t g_t = f_t T_t, coefficient k
    for k in range(order + 1):
        lhs = Matrix.zeros(fld, A.dim, M.dim)
        rhs = Matrix.zeros(fld, A.dim, M.dim)
        for i in range(k + 1):
            lhs = lhs + term1(series2, i) * G[k - i]
            rhs = rhs + F[i] * term1(series1, k - i)
        d = lhs - rhs
        if not d.is_zero():
            for u in range(M.dim):
                col = d.column(u)
                if not vec_is_zero(fld, col):
                    rep.add("morphism-t%d" % k, (u,), col)
    ab = [basis_vec(fld, A.dim, i) for i in range(A.dim)]
    mb = [basis_vec(fld, M.dim, u) for u in range(M.dim)]
    for k in range(order + 1):
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = F[k].apply(A.product(ab[i], ab[j]))
                rhs = zero_vec(fld, A.dim)
                for a in range(k + 1):
                    rhs = vec_add(rhs, A.product(F[a].apply(ab[i]),
                                                 F[k - a].apply(ab[j])))
                d = vec_sub(lhs, rhs)
                if not vec_is_zero(fld, d):
                    rep.add("algebra-morphism-t%d" % k, (i, j), d)
        for i in range(A.dim):
            for u in range(M.dim):
                lhs = G[k].apply(M.left(ab[i], mb[u]))
                rhs = zero_vec(fld, M.dim)
                for a in range(k + 1):
                    rhs = vec_add(rhs, M.left(F[a].apply(ab[i]),
                                              G[k - a].apply(mb[u])))
                d = vec_sub(lhs, rhs)
                if not vec_is_zero(fld, d):
                    rep.add("left-morphism-t%d" % k, (i, u), d)
                lhs = G[k].apply(M.right(mb[u], ab[i]))
                rhs = zero_vec(fld, M.dim)
                for a in range(k + 1):
                    rhs = vec_add(rhs, M.right(G[a].apply(mb[u]),
                                               F[k - a].apply(ab[i])))
                d = vec_sub(lhs, rhs)
                if not vec_is_zero(fld, d):
                    rep.add("right-morphism-t%d" % k, (i, u), d)
        dfa = F[k] * A.alpha - A.alpha * F[k]
        if not dfa.is_zero():
            rep.add("f-twist-t%d" % k, (), dfa.column(0))
        dgp = G[k] * M.phi - M.phi * G[k]
        if not dgp.is_zero():
            rep.add("g-twist-t%d" % k, (), dgp.column(0))
    return rep
