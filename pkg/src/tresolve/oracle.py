"""
Slow reference implementations for cross-checking.  Nothing in the library
imports this module; it exists for the tests.
"""

from fractions import Fraction
from itertools import combinations

from .linalg import Subspace, kernel_basis, Matrix


def _naive_rank(vectors):
    rows = [list(v) for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def _bits(mask, n):
    return tuple(i for i in range(n) if mask >> i & 1)


class OracleMatroid(object):
    """Rank and independence tables over all 2^n subsets."""

    def __init__(self, columns, max_size=16):
        n = len(columns)
        if n > max_size:
            raise ValueError("oracle limited to %d elements" % max_size)
        self.n = n
        self.full = (1 << n) - 1
        self.rank = [_naive_rank([columns[i] for i in _bits(m, n)]) for m in range(1 << n)]
        self.independent = [self.rank[m] == bin(m).count("1") for m in range(1 << n)]
        self._check_axioms()

    def _check_axioms(self):
        ind = self.independent
        assert ind[0], "empty set must be independent"
        for m in range(1 << self.n):
            if not ind[m]:
                continue
            for i in range(self.n):
                if m >> i & 1:
                    assert ind[m & ~(1 << i)], "independence is not hereditary"
        for x in range(1 << self.n):
            if not ind[x]:
                continue
            for y in range(1 << self.n):
                if ind[y] and bin(y).count("1") == bin(x).count("1") + 1:
                    assert any(ind[x | 1 << i] for i in range(self.n) if (y & ~x) >> i & 1), \
                        "exchange axiom fails"

    def r(self, m):
        return self.rank[m]

    def dual_rank(self, m):
        return bin(m).count("1") - self.rank[self.full] + self.rank[self.full & ~m]

    def closure(self, m):
        return sum(1 << i for i in range(self.n) if self.rank[m | 1 << i] == self.rank[m])

    def dual_closure(self, m):
        return sum(1 << i for i in range(self.n) if self.dual_rank(m | 1 << i) == self.dual_rank(m))

    def circuits(self):
        out = []
        for m in range(1, 1 << self.n):
            if not self.independent[m] and all(self.independent[m & ~(1 << i)]
                                               for i in range(self.n) if m >> i & 1):
                out.append(_bits(m, self.n))
        return sorted(out)

    def level(self, m):
        return bin(m).count("1") - self.rank[m] - 1

    def tflats(self):
        """Sets whose complement is a proper flat of the dual matroid."""
        out = []
        for m in range(1, 1 << self.n):
            comp = self.full & ~m
            if self.dual_closure(comp) == comp:
                out.append(m)
        return sorted(out, key=lambda m: (self.level(m), _bits(m, self.n)))

    def tflats_by_level(self):
        d = {}
        for m in self.tflats():
            d.setdefault(self.level(m), []).append(_bits(m, self.n))
        return d

    def is_connected(self, m):
        """No split into two nonempty parts with additive rank."""
        if m == 0:
            return False
        sub = (m - 1) & m
        while sub:
            if self.rank[sub] + self.rank[m & ~sub] == self.rank[m]:
                return False
            sub = (sub - 1) & m
        return True


def oracle_matroid(rep):
    return OracleMatroid([rep.column(a) for a in rep.ground], rep.max_ground_set)


# -- appendix lemmas on rank functions ---------------------------------------------

def _pc(m):
    return bin(m).count("1")


def appendix_lemma_failures(om):
    """Exhaustively test the elementary rank lemmas on om; returns a list of
    (lemma name, witness) pairs, empty when everything holds."""
    n, r, full = om.n, om.r, om.full
    N = 1 << n
    fails = []
    nul = lambda m: _pc(m) - r(m)

    def subsets(m):
        s = m
        while True:
            yield s
            if s == 0:
                return
            s = (s - 1) & m

    for I in range(N):
        for J in subsets(I):
            if nul(J) > nul(I):
                fails.append(("nullity_monotone", (J, I)))
    for I in range(N):
        for J in range(N):
            k = nul(I)
            if nul(J) == k and nul(I | J) == k and nul(I & J) != k:
                fails.append(("nullity_meet", (I, J)))
    for J in range(N):
        if not om.independent[J]:
            continue
        rest = full & ~J
        for I in subsets(rest):
            k = r(I) + r(J) - r(I | J)
            for Jp in subsets(J):
                for Ip in subsets(I):
                    s = r(Jp) + r(Ip) - r(Ip | Jp)
                    if s >= k and s != k:
                        fails.append(("excess_subsets", (I, J, Ip, Jp)))
                    if s == k and r(J & ~Jp) + r(I | Jp) != r(I | J):
                        fails.append(("excess_splitting", (I, J, Ip, Jp)))
    for I2 in range(N):
        for I1 in subsets(I2):
            for J in subsets(I1):
                if not om.independent[J]:
                    continue
                k = r(I2) - r(I2 & ~J)
                if r(I1) - r(I1 & ~J) != k:
                    continue
                for I in subsets(I2 & ~I1):
                    I = I | I1
                    if r(I) - r(I & ~J) != k:
                        fails.append(("excess_tower", (J, I1, I, I2)))
    for I in range(N):
        for J in subsets(I):
            if om.independent[J] and r(J) + r(I & ~J) == r(I):
                for Jp in subsets(J):
                    if r(Jp) + r(I & ~Jp) != r(I):
                        fails.append(("additive_rank_subsets", (I, J, Jp)))
    for I1 in range(N):
        for I2 in range(N):
            if r(I1) + r(I2) != r(I1 | I2):
                continue
            for J1 in subsets(I1):
                for J2 in subsets(I2):
                    if r(J1) + r(J2) != r(J1 | J2):
                        fails.append(("additive_rank_restricts", (I1, I2, J1, J2)))
            U = I1 | I2
            for J in subsets(U):
                basis = om.independent[J] and _pc(J) == r(U)
                split = (om.independent[J & I1] and _pc(J & I1) == r(I1) and
                         om.independent[J & I2] and _pc(J & I2) == r(I2))
                if basis != split:
                    fails.append(("additive_rank_bases", (I1, I2, J)))
    return fails


# -- multiplicity spaces by summing over all chains --------------------------------

def _poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for k in range(total, -1, -1):
        for rest in _compositions(total - k, parts - 1):
            yield (k,) + rest


def _meet_line(om_cols, A, B, w):
    """A generator of span(A) meet span(B), or None."""
    a = [om_cols[i] for i in A]
    b = [om_cols[i] for i in B]
    if not a or not b:
        return None
    M = Matrix([[u[i] for u in a] + [-u[i] for u in b] for i in range(w)], len(a) + len(b))
    K = kernel_basis(M)
    vecs = []
    for v in K.vectors():
        vecs.append(tuple(sum(v[k] * a[k][i] for k in range(len(a))) for i in range(w)))
    S = Subspace.span(vecs, w) if vecs else Subspace.zero(w)
    if S.dim == 0:
        return None
    assert S.dim == 1, "intersection along a chain step has dimension > 1"
    return S.vectors()[0]


def chain_sum_multiplicity(rep, I):
    """Span of the products of step generators over every maximal chain of
    T-flats ending at I, found by brute force over subsets."""
    om = oracle_matroid(rep)
    cols = [rep.column(a) for a in rep.ground]
    w = rep.w_dim
    flats = set()
    for m in om.tflats():
        flats.add(m)
    Im = sum(1 << i for i in I)
    if Im not in flats:
        raise ValueError("not a T-flat")
    n = om.level(Im)
    one = rep.field(1)
    zero = rep.field(0)

    def chains_to(m):
        lv = om.level(m)
        if lv == 0:
            return [[m]]
        out = []
        for f in flats:
            if f & ~m == 0 and f != m and om.level(f) == lv - 1:
                for c in chains_to(f):
                    out.append(c + [m])
        return out

    vecs = []
    for ch in chains_to(Im):
        poly = {tuple([0] * w): one}
        for lo, hi in zip(ch, ch[1:]):
            g = _meet_line(cols, _bits(lo, om.n), _bits(hi & ~lo, om.n), w)
            if g is None:
                poly = {}
                break
            lin = {tuple(1 if t == i else 0 for t in range(w)): g[i] for i in range(w) if g[i]}
            poly = _poly_mul(poly, lin)
        vecs.append(tuple(poly.get(e, zero) for e in _compositions(n, w)))
    dim = len(list(_compositions(n, w)))
    return Subspace.span(vecs, dim) if vecs else Subspace.zero(dim)


# -- the Taylor complex ------------------------------------------------------------

class TaylorComplex(object):
    """components[k]: [(subset, lcm degree)] for |subset| = k;
    differentials[k]: {(i, j): (sign, exponent)}."""

    def __init__(self, degrees):
        self.degrees = [tuple(d) for d in degrees]
        s = len(degrees)
        m = len(degrees[0]) if degrees else 0
        self.m = m
        self.components = {}
        for k in range(s + 1):
            self.components[k] = [(A, self.lcm(A)) for A in combinations(range(s), k)]
        self.differentials = {}
        for k in range(1, s + 1):
            pos = {A: i for i, (A, _) in enumerate(self.components[k - 1])}
            ent = {}
            for j, (A, dA) in enumerate(self.components[k]):
                for p, a in enumerate(A):
                    B = A[:p] + A[p + 1:]
                    dB = self.lcm(B)
                    ent[(pos[B], j)] = (Fraction((-1) ** p), tuple(x - y for x, y in zip(dA, dB)))
            self.differentials[k] = ent

    def lcm(self, A):
        if not A:
            return tuple([0] * self.m)
        return tuple(max(self.degrees[a][i] for a in A) for i in range(self.m))

    def rank(self, k):
        return len(self.components.get(k, ()))

    def scalar_matrix(self, k):
        ent = self.differentials[k]
        return Matrix([[ent[(i, j)][0] if (i, j) in ent else Fraction(0) for j in range(self.rank(k))]
                       for i in range(self.rank(k - 1))], self.rank(k))

    def dd_is_zero(self):
        for k in range(2, len(self.degrees) + 1):
            out = {}
            for (i, l), (c1, e1) in self.differentials[k - 1].items():
                for (l2, j), (c2, e2) in self.differentials[k].items():
                    if l == l2:
                        e = tuple(x + y for x, y in zip(e1, e2))
                        out[(i, j, e)] = out.get((i, j, e), 0) + c1 * c2
            if any(out.values()):
                return False
        return True


def taylor_complex(degrees):
    if any(x < 0 for d in degrees for x in d):
        raise ValueError("degrees must be nonnegative")
    return TaylorComplex(degrees)
