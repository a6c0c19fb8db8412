"""
Exact linear algebra over a Field: row reduction, kernels, subspaces.

Vectors are tuples of scalars.  Matrices carry their column count so that
0 x n matrices keep their shape.
"""

from fractions import Fraction


class Matrix(object):
    """Dense matrix of exact scalars; immutable by convention."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = [tuple(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("column count required for a matrix without rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix: row of length %d, expected %d" % (len(r), ncols))
        self.rows = tuple(rows)
        self.ncols = ncols

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (len(self.rows), self.ncols)

    @classmethod
    def zeros(cls, m, n, zero=0):
        return cls([[zero] * n for _ in range(m)], n)

    @classmethod
    def identity(cls, n, one=1):
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols, nrows):
        cols = [tuple(c) for c in cols]
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self):
        return Matrix([self.col(j) for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        ocols = other.columns()
        out = []
        for r in self.rows:
            out.append([_dot(r, c) for c in ocols])
        return Matrix(out, other.ncols)

    def apply(self, v):
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError("vector length %d, expected %d" % (len(v), self.ncols))
        return tuple(_dot(r, v) for r in self.rows)

    def scale(self, c):
        return Matrix([[c * x for x in r] for r in self.rows], self.ncols)

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def submatrix(self, rows, cols):
        return Matrix([[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return "Matrix(%dx%d)" % self.shape

    def tolist(self):
        return [list(r) for r in self.rows]


def _dot(u, v):
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def _inv(x):
    if isinstance(x, int):
        x = Fraction(x)
    return 1 / x


def rref(m):
    """Reduced row echelon form.

    Returns (R, pivots) where R has only the nonzero rows.  Pivot = first
    nonzero entry in the current column scanning rows top-down; no other
    pivoting heuristics, so output is deterministic.
    """
    if not isinstance(m, Matrix):
        m = Matrix(m)
    rows = [list(r) for r in m.rows]
    ncols = m.ncols
    pivots = []
    top = 0
    for j in range(ncols):
        p = None
        for i in range(top, len(rows)):
            if rows[i][j]:
                p = i
                break
        if p is None:
            continue
        rows[top], rows[p] = rows[p], rows[top]
        inv = _inv(rows[top][j])
        prow = [x * inv if x else x for x in rows[top]]
        rows[top] = prow
        for i in range(len(rows)):
            if i != top and rows[i][j]:
                c = rows[i][j]
                ri = rows[i]
                rows[i] = [a - c * b if b else a for a, b in zip(ri, prow)]
        pivots.append(j)
        top += 1
        if top == len(rows):
            break
    return Matrix(rows[:top], ncols), tuple(pivots)


def rref_rank(m):
    r, piv = rref(m)
    return r, len(piv)


def rank(m):
    if not isinstance(m, Matrix):
        if not m:
            return 0
        m = Matrix(m)
    return len(rref(m)[1])


def det(m):
    """Determinant by elimination; det of a 0x0 matrix is 1."""
    if not isinstance(m, Matrix):
        m = Matrix(m, len(m))
    n = m.nrows
    if n != m.ncols:
        raise ValueError("det of non-square %s" % (m.shape,))
    rows = [list(r) for r in m.rows]
    d = 1
    for j in range(n):
        p = None
        for i in range(j, n):
            if rows[i][j]:
                p = i
                break
        if p is None:
            return rows[0][0] * 0 if n else 1
        if p != j:
            rows[j], rows[p] = rows[p], rows[j]
            d = -d
        piv = rows[j][j]
        d = d * piv
        inv = _inv(piv)
        for i in range(j + 1, n):
            if rows[i][j]:
                c = rows[i][j] * inv
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[j])]
    return d


def kernel_basis(m, one=None):
    """Right null space of m as a Subspace of k^(cols)."""
    if not isinstance(m, Matrix):
        m = Matrix(m)
    n = m.ncols
    r, piv = rref(m)
    pivset = set(piv)
    free = [j for j in range(n) if j not in pivset]
    vecs = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, p in enumerate(piv):
            v[p] = -r.rows[i][f]
        vecs.append(v)
    if one is None:
        one = _field_one(m)
    vecs = [[x * one for x in v] for v in vecs]
    return Subspace.span(vecs, n)


def _field_one(m):
    for r in m.rows:
        for x in r:
            return x ** 0 if isinstance(x, Fraction) else x - x + 1
    return Fraction(1)


class Subspace(object):
    """Subspace of k^n stored as an RREF basis (rows) with pivot columns."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, basis, pivots, ambient_dim):
        self.basis = basis
        self.pivots = pivots
        self.ambient_dim = ambient_dim

    @classmethod
    def span(cls, vectors, ambient_dim):
        vectors = [tuple(v) for v in vectors]
        if not vectors:
            return cls(Matrix([], ambient_dim), (), ambient_dim)
        r, piv = rref(Matrix(vectors, ambient_dim))
        return cls(r, piv, ambient_dim)

    @classmethod
    def zero(cls, ambient_dim):
        return cls(Matrix([], ambient_dim), (), ambient_dim)

    @property
    def dim(self):
        return len(self.pivots)

    def vectors(self):
        return list(self.basis.rows)

    def contains(self, v):
        return self.coordinates(v) is not None

    def coordinates(self, v):
        """Coordinates of v in the RREF basis, or None when v is not in it."""
        v = tuple(v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector of length %d in ambient %d" % (len(v), self.ambient_dim))
        c = tuple(v[p] for p in self.pivots)
        w = list(v)
        for ci, row in zip(c, self.basis.rows):
            if ci:
                w = [a - ci * b if b else a for a, b in zip(w, row)]
        if any(w):
            return None
        return c

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.pivots == other.pivots and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots, self.basis.rows))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)

    def __le__(self, other):
        return all(other.contains(v) for v in self.basis.rows)


def subspace_join(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ: %d vs %d" % (a.ambient_dim, b.ambient_dim))
    return Subspace.span(a.vectors() + b.vectors(), a.ambient_dim)


def subspace_meet(a, b):
    """Intersection via the kernel of [A^T | -B^T]."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ: %d vs %d" % (a.ambient_dim, b.ambient_dim))
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n)
    av, bv = a.vectors(), b.vectors()
    cols = av + [tuple(-x for x in v) for v in bv]
    k = kernel_basis(Matrix.from_columns(cols, n))
    out = []
    for coeffs in k.vectors():
        v = [0] * n
        for c, u in zip(coeffs[:len(av)], av):
            if c:
                v = [x + c * y for x, y in zip(v, u)]
        out.append(v)
    return Subspace.span(out, n)


def solve_coordinates(basis_rows, vectors):
    """Coordinates of each vector in terms of the (independent) basis rows.

    Raises ValueError when a vector is outside the span.
    """
    basis_rows = [tuple(r) for r in basis_rows]
    k = len(basis_rows)
    if k == 0:
        for v in vectors:
            if any(v):
                raise ValueError("vector outside span")
        return [() for _ in vectors]
    n = len(basis_rows[0])
    out = []
    # augment: rows = [basis^T | v] solved column-wise
    for v in vectors:
        aug = Matrix.from_columns(basis_rows + [tuple(v)], n)
        r, piv = rref(aug)
        if k in piv:
            raise ValueError("vector outside span")
        if len(piv) != k:
            raise ValueError("basis rows are dependent")
        out.append(tuple(r.rows[i][k] for i in range(k)))
    return out
