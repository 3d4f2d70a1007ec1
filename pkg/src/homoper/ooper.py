"""O-operators, Rota-Baxter operators, their lifts, and induced structures.

An O-operator is a map T: M -> A whose graph is a subalgebra of the
semidirect product; equivalently the lifted endomorphism (0 T; 0 0) of
A + M is Rota-Baxter, equivalently it is Nijenhuis.  All four
characterizations are implemented and tested to agree instance by
instance, separately for the product identity and for the
twist-intertwining condition T.phi = alpha.T (the latter is reported as a
warning, matching the conventions of `homcore`).
"""

from __future__ import annotations

from .exlin import Matrix, InputError, DomainError, vec_add, vec_sub, vec_is_zero, basis_vec, zero_vec
from .homcore import (HomAlgebra, Bimodule, LinearMap, Report,
                      adjoint_bimodule, semidirect_product, _tensor3)


def _check_shapes(A, M, T):
    if M.algebra is not A and (M.algebra.dim != A.dim or M.algebra.field != A.field):
        raise InputError("bimodule is not over the given algebra")
    if T.source_dim != M.dim or T.target_dim != A.dim:
        raise InputError("T must map M (dim %d) to A (dim %d), got %d -> %d"
                         % (M.dim, A.dim, T.source_dim, T.target_dim))


def verify_o_operator(A, M, T):
    """Check T(u).T(v) = T(l(T(u),v) + r(u,T(v))) on all basis pairs.

    The intertwining condition T.phi = alpha.T is checked as a warning.
    """
    _check_shapes(A, M, T)
    rep = Report()
    fld = A.field
    comm = T.matrix * M.phi - A.alpha * T.matrix
    for j in range(M.dim):
        col = comm.column(j)
        if not vec_is_zero(fld, col):
            rep.add("twist-intertwine", (j,), col, warning=True)
    mb = [basis_vec(fld, M.dim, u) for u in range(M.dim)]
    for u in range(M.dim):
        for v in range(M.dim):
            lhs = A.product(T(mb[u]), T(mb[v]))
            inner = vec_add(M.left(T(mb[u]), mb[v]), M.right(mb[u], T(mb[v])))
            d = vec_sub(lhs, T(inner))
            if not vec_is_zero(fld, d):
                rep.add("o-operator-product", (u, v), d)
    return rep


def verify_rota_baxter(A, R):
    """Weight-0 Rota-Baxter check: O-operator against the adjoint bimodule."""
    return verify_o_operator(A, adjoint_bimodule(A), R)


def graph_is_subalgebra(A, M, T, include_twist=False):
    """Is Gr(T) = {(T(u), u)} closed under the semidirect product?

    With include_twist=True also require closure under (alpha, phi); the
    default matches the verdict of verify_o_operator (product identity only).
    """
    _check_shapes(A, M, T)
    fld = A.field
    mb = [basis_vec(fld, M.dim, u) for u in range(M.dim)]
    for u in range(M.dim):
        for v in range(M.dim):
            first = A.product(T(mb[u]), T(mb[v]))
            second = vec_add(M.left(T(mb[u]), mb[v]), M.right(mb[u], T(mb[v])))
            if not vec_eq_vec(fld, first, T(second)):
                return False
    if include_twist:
        comm = T.matrix * M.phi - A.alpha * T.matrix
        if not comm.is_zero():
            return False
    return True


def vec_eq_vec(field, a, b):
    return vec_is_zero(field, vec_sub(a, b))


def hat_lift(A, M, T):
    """The endomorphism (a, m) -> (T(m), 0) of A + M."""
    _check_shapes(A, M, T)
    fld = A.field
    n, m = A.dim, M.dim
    d = n + m
    entries = [[fld.zero] * d for _ in range(d)]
    for i in range(n):
        for u in range(m):
            entries[i][n + u] = T.matrix[i, u]
    return LinearMap(fld, Matrix(fld, entries))


# the Nijenhuis lift is the same block matrix (0 T; 0 0)
nijenhuis_lift = hat_lift


class HomDendriform:
    """Two products prec/succ with twist phi; their sum is Hom-associative."""

    def __init__(self, field, prec, succ, phi):
        self.field = field
        self.dim = len(prec)
        self.prec = _tensor3(field, prec, self.dim, self.dim, self.dim, "prec")
        self.succ = _tensor3(field, succ, self.dim, self.dim, self.dim, "succ")
        if not isinstance(phi, Matrix):
            phi = Matrix(field, phi)
        if phi.rows != self.dim or phi.cols != self.dim:
            raise InputError("phi must be %dx%d" % (self.dim, self.dim))
        self.phi = phi

    def _bil(self, tensor, a, b):
        z = zero_vec(self.field, self.dim)
        for i, ai in enumerate(a):
            if ai == self.field.zero:
                continue
            for j, bj in enumerate(b):
                if bj == self.field.zero:
                    continue
                z = vec_add(z, [ai * bj * c for c in tensor[i][j]])
        return z

    def lt(self, a, b):
        return self._bil(self.prec, a, b)

    def gt(self, a, b):
        return self._bil(self.succ, a, b)

    def star(self, a, b):
        return vec_add(self.lt(a, b), self.gt(a, b))

    def twist(self, a):
        return self.phi.apply(a)

    def sum_algebra(self):
        """(D, prec + succ, phi) as a HomAlgebra."""
        mu = [[vec_add(list(self.prec[i][j]), list(self.succ[i][j]))
               for j in range(self.dim)] for i in range(self.dim)]
        return HomAlgebra(self.field, mu, self.phi)


def verify_hom_dendriform(D):
    """Check the three splitting identities on all basis triples."""
    rep = Report()
    fld = D.field
    basis = [basis_vec(fld, D.dim, i) for i in range(D.dim)]
    for i in range(D.dim):
        for j in range(D.dim):
            for k in range(D.dim):
                x, y, z = basis[i], basis[j], basis[k]
                d1 = vec_sub(D.lt(D.lt(x, y), D.twist(z)),
                             D.lt(D.twist(x), D.star(y, z)))
                if not vec_is_zero(fld, d1):
                    rep.add("dendriform-1", (i, j, k), d1)
                d2 = vec_sub(D.lt(D.gt(x, y), D.twist(z)),
                             D.gt(D.twist(x), D.lt(y, z)))
                if not vec_is_zero(fld, d2):
                    rep.add("dendriform-2", (i, j, k), d2)
                d3 = vec_sub(D.gt(D.star(x, y), D.twist(z)),
                             D.gt(D.twist(x), D.gt(y, z)))
                if not vec_is_zero(fld, d3):
                    rep.add("dendriform-3", (i, j, k), d3)
    return rep


def _require_o_operator(A, M, T, force=False):
    if force:
        return
    rep = verify_o_operator(A, M, T)
    if not rep.ok:
        raise DomainError("T is not an O-operator:\n%s" % rep)


def induced_dendriform(A, M, T, force=False):
    """Hom-dendriform structure on M: u < v = r(u,T(v)), u > v = l(T(u),v)."""
    _check_shapes(A, M, T)
    _require_o_operator(A, M, T, force)
    fld = A.field
    m = M.dim
    mb = [basis_vec(fld, m, u) for u in range(m)]
    prec = [[M.right(mb[u], T(mb[v])) for v in range(m)] for u in range(m)]
    succ = [[M.left(T(mb[u]), mb[v]) for v in range(m)] for u in range(m)]
    return HomDendriform(fld, prec, succ, M.phi)


def induced_module_algebra(A, M, T, force=False):
    """The Hom-associative algebra (M, star_T, phi), star_T = prec + succ."""
    return induced_dendriform(A, M, T, force).sum_algebra()


def induced_bimodule_on_A(A, M, T, force=False):
    """M-bimodule structure on A over (M, star_T, phi):

        l_T(u, x) = T(u).x - T(r(u, x)),   r_T(x, u) = x.T(u) - T(l(x, u)).
    """
    _check_shapes(A, M, T)
    _require_o_operator(A, M, T, force)
    fld = A.field
    n, m = A.dim, M.dim
    Mstar = induced_module_algebra(A, M, T, force=True)
    ab = [basis_vec(fld, n, i) for i in range(n)]
    mb = [basis_vec(fld, m, u) for u in range(m)]
    # base algebra is (M, star_T); module space is A with twist alpha
    l = [[vec_sub(A.product(T(mb[u]), ab[x]), T(M.right(mb[u], ab[x])))
          for x in range(n)] for u in range(m)]
    r = [[vec_sub(A.product(ab[x], T(mb[u])), T(M.left(ab[x], mb[u])))
          for u in range(m)] for x in range(n)]
    return Bimodule(Mstar, l, r, A.alpha, dim=n)


class OOperator:
    """Bundle (A, M, T) with cached helpers used by the cochain complex.

    Construction verifies the product identity; `twist_compatible` records
    whether T.phi = alpha.T, which the cohomology machinery requires.
    """

    def __init__(self, algebra, module, T, force=False):
        _check_shapes(algebra, module, T)
        self.algebra = algebra
        self.module = module
        self.T = T
        rep = verify_o_operator(algebra, module, T)
        if not rep.ok and not force:
            raise DomainError("not an O-operator:\n%s" % rep)
        self.twist_compatible = not rep.warnings

    @property
    def field(self):
        return self.algebra.field

    def star(self, u, v):
        """u *_T v = r(u, T(v)) + l(T(u), v) on M."""
        return vec_add(self.module.right(u, self.T(v)),
                       self.module.left(self.T(u), v))
