"""Differentials as matrices on the compatible cochain bases, and the
cocycle / coboundary / cohomology spaces of an O-operator.

Everything here works in coordinates: C^n_alpha(M, A) gets the deterministic
basis produced by cochain.compatible_basis, the differential becomes a
matrix between consecutive bases, and Z/B/H are kernel, image and quotient
computed by exact Gaussian elimination.  Cohomology via d_T and via d_H
coincide (the (-1)^n sign changes neither kernels nor images); d_H is the
default because it is the cheaper formula.
"""

from __future__ import annotations

from .exlin import Matrix, InputError, DomainError, vec_sub, vec_is_zero, span_dim
from . import cochain as CC


def _solve_many(field, bmat, rhs_list):
    """Solve bmat x = rhs for several rhs at once; returns list of solution
    vectors (free variables zero) or None per rhs."""
    rows, cols = bmat.rows, bmat.cols
    k = len(rhs_list)
    aug = [[bmat[i, j] for j in range(cols)] + [rhs[i] for rhs in rhs_list]
           for i in range(rows)]
    R, pivots = Matrix(field, aug).rref() if rows else (Matrix(field, [[field.zero] * (cols + k)]), [])
    if rows == 0:
        return [[field.zero] * cols for _ in rhs_list]
    sols = []
    for t in range(k):
        col = cols + t
        if col in pivots:
            sols.append(None)
            continue
        x = [field.zero] * cols
        ok = True
        for rix, pc in enumerate(pivots):
            if pc < cols:
                x[pc] = R[rix, col]
            elif R[rix, col] != field.zero:
                ok = False
                break
        sols.append(x if ok else None)
    return sols


def basis_matrix(basis, field, size):
    return Matrix.from_columns(field, [b.flatten() for b in basis]) if basis \
        else Matrix.zeros(field, size, 0)


def coords_in_basis(f, basis):
    """Coordinates of the cochain f in the given compatible basis, or None."""
    fld = f.field
    flat = f.flatten()
    bmat = basis_matrix(basis, fld, len(flat))
    sols = _solve_many(fld, bmat, [flat])
    return sols[0]


class CochainComplexSlice:
    """The degree-n slice of the complex of an O-operator: compatible bases
    at degrees n and n+1 and the differential between them as a matrix."""

    def __init__(self, oper, degree, basis_n, basis_np1, matrix, differential):
        self.oper = oper
        self.degree = degree
        self.basis_n = basis_n
        self.basis_np1 = basis_np1
        self.matrix = matrix          # |basis_np1| x |basis_n|
        self.differential = differential  # "dT" or "dH"

    def apply(self, coords):
        return self.matrix.apply(coords)


def _require_complex(T):
    if not T.twist_compatible:
        raise DomainError(
            "the cochain complex needs a twist-compatible O-operator "
            "(T.phi = alpha.T); this one only satisfies the product identity")


def compatible_cochain_basis(T, degree, constrained=True):
    A, M = T.algebra, T.module
    if constrained:
        return CC.compatible_basis(A.field, M.dim, M.phi, A.dim, A.alpha, degree)
    fld = A.field
    size = (M.dim ** degree) * A.dim
    out = []
    for j in range(size):
        flat = [fld.zero] * size
        flat[j] = fld.one
        out.append(CC.Cochain.unflatten(fld, degree, M.dim, A.dim, flat))
    return out


def differential_matrix(T, degree, differential="dH", constrained=True):
    """Matrix of d at the given degree on the compatible basis."""
    _require_complex(T)
    A, M = T.algebra, T.module
    fld = A.field
    basis_n = compatible_cochain_basis(T, degree, constrained)
    basis_np1 = compatible_cochain_basis(T, degree + 1, constrained)
    d = CC.d_H if differential == "dH" else CC.d_T
    if differential not in ("dH", "dT"):
        raise InputError("differential must be 'dH' or 'dT'")
    size_np1 = (M.dim ** (degree + 1)) * A.dim
    bmat = basis_matrix(basis_np1, fld, size_np1)
    images = [d(T, f).flatten() for f in basis_n]
    sols = _solve_many(fld, bmat, images)
    cols = []
    for s in sols:
        if s is None:
            raise DomainError(
                "differential left the compatible subspace at degree %d" % degree)
        cols.append(s)
    mat = Matrix.from_columns(fld, cols) if cols \
        else Matrix.zeros(fld, len(basis_np1), 0)
    return CochainComplexSlice(T, degree, basis_n, basis_np1, mat, differential)


def cohomology_dims(T, degree, differential="dH", constrained=True):
    """(dim Z^n, dim B^n, dim H^n) at the given degree."""
    sl = differential_matrix(T, degree, differential, constrained)
    dim_z = len(sl.basis_n) - sl.matrix.rank()
    if degree == 0:
        dim_b = 0
    else:
        below = differential_matrix(T, degree - 1, differential, constrained)
        dim_b = below.matrix.rank()
    return (dim_z, dim_b, dim_z - dim_b)


def is_cocycle(T, f, differential="dH"):
    d = CC.d_H if differential == "dH" else CC.d_T
    return d(T, f).is_zero()


def is_coboundary(T, f, differential="dH", constrained=True):
    """Return a preimage cochain g with d g = f, or None.

    Degree-0 cochains are never coboundaries (the complex starts at 0).
    """
    if f.degree == 0:
        return None
    sl = differential_matrix(T, f.degree - 1, differential, constrained)
    coords = coords_in_basis(f, sl.basis_np1)
    if coords is None:
        return None
    sol = sl.matrix.solve_affine(coords)
    if sol is None:
        return None
    x, _kernel = sol
    fld = f.field
    g = CC.Cochain.zero(fld, f.degree - 1, f.src_dim, f.tgt_dim)
    for c, b in zip(x, sl.basis_n):
        if c != fld.zero:
            g = g + b.scale(c)
    return g


def cocycle_basis(T, degree, differential="dH", constrained=True):
    """Basis of Z^n as cochains (kernel of the differential matrix mapped
    back through the compatible basis)."""
    sl = differential_matrix(T, degree, differential, constrained)
    fld = T.field
    out = []
    for v in sl.matrix.kernel_basis():
        g = CC.Cochain.zero(fld, degree, T.module.dim, T.algebra.dim)
        for c, b in zip(v, sl.basis_n):
            if c != fld.zero:
                g = g + b.scale(c)
        out.append(g)
    return out


def coboundary_basis(T, degree, differential="dH", constrained=True):
    """Basis of B^n: images of the degree-(n-1) basis, thinned to a basis."""
    if degree == 0:
        return []
    below = differential_matrix(T, degree - 1, differential, constrained)
    d = CC.d_H if differential == "dH" else CC.d_T
    fld = T.field
    out = []
    flats = []
    size = (T.module.dim ** degree) * T.algebra.dim
    for f in below.basis_n:
        img = d(T, f)
        cand = flats + [img.flatten()]
        if span_dim(fld, cand, size) > len(flats):
            flats.append(img.flatten())
            out.append(img)
    return out


def representatives(T, degree, differential="dH", constrained=True):
    """Echelon coset representatives of H^n = Z^n / B^n."""
    fld = T.field
    zs = cocycle_basis(T, degree, differential, constrained)
    bs = coboundary_basis(T, degree, differential, constrained)
    size = (T.module.dim ** degree) * T.algebra.dim
    chosen = []
    flats = [b.flatten() for b in bs]
    base_rank = span_dim(fld, flats, size)
    for z in zs:
        cand = flats + [z.flatten()]
        if span_dim(fld, cand, size) > len(flats):
            flats.append(z.flatten())
            chosen.append(z)
    assert len(flats) - base_rank == len(chosen)
    return chosen


def h0_space(T):
    """Basis of H^0 = {a : alpha(a) = a, d_H a = 0} plus a commutator-closure
    report: for basis elements a, b of H^0, [a,b] = ab - ba lies in H^0."""
    _require_complex(T)
    A = T.algebra
    fld = A.field
    basis = cocycle_basis(T, 0)
    closed = True
    vecs = [f.coeffs[0] for f in basis]
    flats = list(vecs)
    rank = span_dim(fld, flats, A.dim)
    for a in vecs:
        for b in vecs:
            c = A.commutator(a, b)
            cc = CC.Cochain(fld, 0, T.module.dim, A.dim, [c])
            if not CC.is_compatible(cc, T.module.phi, A.alpha) or \
                    not is_cocycle(T, cc):
                closed = False
            if span_dim(fld, flats + [c], A.dim) > rank:
                closed = False
    return basis, closed
