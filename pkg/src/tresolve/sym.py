"""
Coordinates on symmetric powers S_n(k^w).

Monomials of degree n in w variables are ordered lexicographically on
their exponent vectors, largest first, so that degree 1 coordinates agree
with the coordinates of k^w.
"""

from functools import lru_cache
from math import comb

from .linalg import Matrix


@lru_cache(maxsize=None)
def monomials(w_dim, degree):
    """All exponent vectors of total degree `degree`, in coordinate order."""
    if w_dim == 0:
        return ((),) if degree == 0 else ()
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(w_dim - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(w_dim, degree):
    return {e: i for i, e in enumerate(monomials(w_dim, degree))}


class SymCoords(object):
    """Coordinate system for the degree-n symmetric power of a w-dim space."""

    __slots__ = ("w_dim", "degree")

    def __init__(self, w_dim, degree):
        if degree < 0:
            raise ValueError("negative degree")
        self.w_dim = w_dim
        self.degree = degree

    @property
    def dim(self):
        return comb(self.w_dim + self.degree - 1, self.degree) if self.w_dim else int(self.degree == 0)

    @property
    def index_map(self):
        return monomial_index(self.w_dim, self.degree)

    def monomials(self):
        return monomials(self.w_dim, self.degree)

    def __eq__(self, other):
        return isinstance(other, SymCoords) and (self.w_dim, self.degree) == (other.w_dim, other.degree)

    def __hash__(self):
        return hash((self.w_dim, self.degree))

    def __repr__(self):
        return "SymCoords(w=%d, n=%d)" % (self.w_dim, self.degree)


def sym_degree(vec, w_dim):
    """Recover the degree of a coordinate vector from its length."""
    n = 0
    while True:
        d = len(monomials(w_dim, n))
        if d == len(vec):
            return n
        if d > len(vec) or (w_dim <= 1 and n > len(vec)):
            raise ValueError("length %d is not a symmetric power dimension for w=%d" % (len(vec), w_dim))
        n += 1


def sym_multiply(u, v, w_dim, p=None, q=None):
    """Product of u in S_p and v in S_q, as coordinates in S_{p+q}."""
    if p is None:
        p = sym_degree(u, w_dim)
    if q is None:
        q = sym_degree(v, w_dim)
    mu, mv = monomials(w_dim, p), monomials(w_dim, q)
    if len(u) != len(mu) or len(v) != len(mv):
        raise ValueError("coordinate vectors do not match the stated degrees")
    target = monomial_index(w_dim, p + q)
    out = [0] * len(target)
    for a, ea in zip(u, mu):
        if not a:
            continue
        for b, eb in zip(v, mv):
            if not b:
                continue
            k = target[tuple(x + y for x, y in zip(ea, eb))]
            out[k] = out[k] + a * b
    return tuple(out)


def sym_power_matrix(lin, degree):
    """Matrix of S_n(f): S_n(k^w) -> S_n(k^w') for the linear map f.

    Each monomial is mapped by substituting the images of the variables
    and re-expanding with sym_multiply.
    """
    w_src, w_dst = lin.ncols, lin.nrows
    cols = lin.columns()
    out = []
    one = _unit(lin)
    for e in monomials(w_src, degree):
        img = (one,)
        d = 0
        for var, power in enumerate(e):
            for _ in range(power):
                img = sym_multiply(img, cols[var], w_dst, d, 1)
                d += 1
        out.append(img)
    return Matrix.from_columns(out, len(monomials(w_dst, degree)))


def _unit(m):
    for r in m.rows:
        for x in r:
            return x - x + 1
    return 1
