"""Exact fields (Q and F_p) and dense linear algebra.

Everything downstream computes on these: rationals are `fractions.Fraction`
(always lowest terms, positive denominator), prime-field elements are `Fp`
instances carrying their modulus.  Matrices are immutable, dense and small;
row reduction is plain exact Gaussian elimination with canonical pivoting so
kernel bases are reproducible run to run.
"""

from __future__ import annotations

from fractions import Fraction


class ExactError(Exception):
    """Base class for input/domain errors raised by this package."""


class InputError(ExactError):
    """Malformed or dimensionally inconsistent input."""


class DomainError(ExactError):
    """Input is well-formed but violates a mathematical precondition."""


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Fp:
    """An element of the prime field F_p, residue stored in [0, p)."""

    __slots__ = ("r", "p")

    def __init__(self, r, p):
        self.r = r % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise InputError("mixed moduli: F_%d vs F_%d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else Fp(self.r + o.r, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else Fp(self.r - o.r, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else Fp(o.r - self.r, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else Fp(self.r * o.r, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.r == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Fp(self.r * pow(o.r, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else o.__truediv__(self)

    def __neg__(self):
        return Fp(-self.r, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.r == other.r
        if isinstance(other, int):
            return self.r == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.r, self.p))

    def __bool__(self):
        return self.r != 0

    def __repr__(self):
        return "Fp(%d, %d)" % (self.r, self.p)


class Field:
    """Descriptor for Q or F_p; builds, parses and formats elements."""

    def __init__(self, char=0):
        if char != 0 and not _is_prime(char):
            raise InputError("field characteristic must be 0 or a prime, got %r" % (char,))
        self.char = char
        # zero/one are immutable; cache them (they sit in very hot loops)
        self._zero = self(0)
        self._one = self(1)

    @property
    def is_rational(self):
        return self.char == 0

    def __call__(self, value):
        """Coerce an int, Fraction, Fp or string to a field element."""
        if isinstance(value, str):
            return self.parse(value)
        if self.char == 0:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise InputError("cannot coerce %r into Q" % (value,))
        if isinstance(value, int):
            return Fp(value, self.char)
        if isinstance(value, Fp):
            if value.p != self.char:
                raise InputError("element of F_%d used in F_%d" % (value.p, self.char))
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.char == 0:
                raise InputError("denominator divisible by %d" % self.char)
            return Fp(value.numerator, self.char) / Fp(value.denominator, self.char)
        raise InputError("cannot coerce %r into F_%d" % (value, self.char))

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def parse(self, s):
        """Parse "p/q" (Q) or a decimal residue (F_p)."""
        s = s.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                return self(Fraction(int(num), int(den)))
            return self(int(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError("bad field element %r: %s" % (s, exc)) from exc

    def fmt(self, x):
        x = self(x)
        if self.char == 0:
            if x.denominator == 1:
                return str(x.numerator)
            return "%d/%d" % (x.numerator, x.denominator)
        return str(x.r)

    def contains(self, x):
        if self.char == 0:
            return isinstance(x, (int, Fraction))
        return isinstance(x, Fp) and x.p == self.char or isinstance(x, int)

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else "GF(%d)" % self.char

    @staticmethod
    def from_name(name):
        """Parse a field selector: "Q" or "Fp:<p>"."""
        name = name.strip()
        if name in ("Q", "QQ"):
            return Field(0)
        if name.startswith("Fp:"):
            try:
                return Field(int(name[3:]))
            except ValueError as exc:
                raise InputError("bad field selector %r" % name) from exc
        raise InputError("bad field selector %r (expected Q or Fp:<p>)" % name)

    @property
    def name(self):
        return "Q" if self.char == 0 else "Fp:%d" % self.char


QQ = Field(0)


def GF(p):
    return Field(p)


class Matrix:
    """Immutable dense matrix; entry[i][j] = coefficient of output i, input j."""

    def __init__(self, field, entries):
        self.field = field
        rows = [tuple(field(x) for x in row) for row in entries]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise InputError("ragged matrix rows")
        self.entries = tuple(rows)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0

    @staticmethod
    def zeros(field, rows, cols):
        return Matrix(field, [[field.zero] * cols for _ in range(rows)])

    @staticmethod
    def identity(field, n):
        return Matrix(field, [[field.one if i == j else field.zero for j in range(n)]
                              for i in range(n)])

    @staticmethod
    def from_columns(field, cols):
        if not cols:
            return Matrix(field, [])
        n = len(cols[0])
        return Matrix(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return "Matrix(%r, %s)" % (self.field, [list(r) for r in self.entries])

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(self.field, [[a + b for a, b in zip(ra, rb)]
                                   for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(self.field, [[a - b for a, b in zip(ra, rb)]
                                   for ra, rb in zip(self.entries, other.entries)])

    def _check_same_shape(self, other):
        if self.field != other.field:
            raise InputError("mixed fields: %r vs %r" % (self.field, other.field))
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("shape mismatch: %dx%d vs %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))

    def scale(self, c):
        c = self.field(c)
        return Matrix(self.field, [[c * a for a in row] for row in self.entries])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field:
            raise InputError("mixed fields")
        if self.cols != other.rows:
            raise InputError("dimension mismatch in product: %dx%d times %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        z = self.field.zero
        out = []
        for i in range(self.rows):
            ri = self.entries[i]
            out.append([sum((ri[k] * other.entries[k][j] for k in range(self.cols)), z)
                        for j in range(other.cols)])
        return Matrix(self.field, out)

    def apply(self, v):
        """Matrix times column vector (a list of field elements)."""
        if len(v) != self.cols:
            raise InputError("vector length %d, expected %d" % (len(v), self.cols))
        z = self.field.zero
        return [sum((self.entries[i][j] * v[j] for j in range(self.cols)), z)
                for i in range(self.rows)]

    def transpose(self):
        return Matrix(self.field, [[self.entries[i][j] for i in range(self.rows)]
                                   for j in range(self.cols)])

    def power(self, k):
        if k < 0:
            inv = self.inverse()
            if inv is None:
                raise DomainError("negative power of a singular matrix")
            return inv.power(-k)
        out = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self):
        z = self.field.zero
        return all(a == z for row in self.entries for a in row)

    def is_identity(self):
        return self == Matrix.identity(self.field, self.rows) and self.rows == self.cols

    def rref(self):
        """Reduced row echelon form; returns (rref matrix, pivot column list)."""
        z = self.field.zero
        rows = [list(r) for r in self.entries]
        pivots = []
        pr = 0
        for pc in range(self.cols):
            # canonical pivoting: first nonzero entry at or below pr
            pivot_row = None
            for i in range(pr, self.rows):
                if rows[i][pc] != z:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
            inv = rows[pr][pc]
            rows[pr] = [a / inv for a in rows[pr]]
            for i in range(self.rows):
                if i != pr and rows[i][pc] != z:
                    c = rows[i][pc]
                    rows[i] = [a - c * b for a, b in zip(rows[i], rows[pr])]
            pivots.append(pc)
            pr += 1
            if pr == self.rows:
                break
        return Matrix(self.field, rows), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis of the null space, one vector per free column.

        Canonical: from the RREF, free variables in increasing index order,
        each basis vector has 1 in its free slot.
        """
        R, pivots = self.rref()
        z, one = self.field.zero, self.field.one
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [z] * self.cols
            v[f] = one
            for k, pc in enumerate(pivots):
                v[pc] = -R.entries[k][f]
            basis.append(v)
        return basis

    def solve_affine(self, b):
        """Solve M x = b exactly.

        Returns (particular solution, kernel basis) or None if inconsistent.
        """
        if len(b) != self.rows:
            raise InputError("rhs length %d, expected %d" % (len(b), self.rows))
        b = [self.field(x) for x in b]
        aug = Matrix(self.field, [list(self.entries[i]) + [b[i]] for i in range(self.rows)])
        R, pivots = aug.rref()
        z = self.field.zero
        if self.cols in pivots:
            return None
        x = [z] * self.cols
        for k, pc in enumerate(pivots):
            x[pc] = R.entries[k][self.cols]
        return x, self.kernel_basis()

    def inverse(self):
        """Exact inverse, or None if singular."""
        if self.rows != self.cols:
            return None
        n = self.rows
        aug = Matrix(self.field, [list(self.entries[i])
                                  + list(Matrix.identity(self.field, n).entries[i])
                                  for i in range(n)])
        R, pivots = aug.rref()
        if pivots != list(range(n)):
            return None
        return Matrix(self.field, [row[n:] for row in R.entries])


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]

def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]

def vec_scale(c, u):
    return [c * a for a in u]

def vec_is_zero(field, u):
    z = field.zero
    return all(a == z for a in u)

def vec_eq(u, v):
    return len(u) == len(v) and all(a == b for a, b in zip(u, v))

def zero_vec(field, n):
    return [field.zero] * n

def basis_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def span_dim(field, vectors, length):
    """Dimension of the span of the given coordinate vectors."""
    if not vectors:
        return 0
    return Matrix(field, [list(v) for v in vectors]).rank()
