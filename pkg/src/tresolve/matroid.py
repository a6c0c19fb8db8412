"""
Matroids given by a representation phi: U_S -> W.

Ground-set elements are the column indices 0..|S|-1 of the matrix of phi;
subsets are passed around as sorted tuples of indices.  Ranks are cached
per representation, keyed by bitmask.
"""

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .field import QQ
from .linalg import Matrix, rank as matrix_rank, Subspace

DEFAULT_MAX_GROUND_SET = 16


class GroundSetTooLarge(ValueError):
    pass


def mask_of(A):
    m = 0
    for a in A:
        m |= 1 << a
    return m


def subset_of(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class Representation(object):
    """Labeled columns phi(a) in W = k^w_dim.

    The label order is the fixed total order of the ground set; every sign
    computed downstream refers to it.
    """

    def __init__(self, matrix, labels=None, field=QQ, max_ground_set=DEFAULT_MAX_GROUND_SET):
        if isinstance(matrix, Matrix):
            rows, ncols = matrix.rows, matrix.ncols
        else:
            rows = list(matrix)
            ncols = len(rows[0]) if rows else (len(labels) if labels is not None else 0)
        phi = Matrix([[field(x) for x in r] for r in rows], ncols)
        if labels is None:
            labels = [str(i + 1) for i in range(phi.ncols)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != phi.ncols:
            raise ValueError("%d labels for %d columns" % (len(labels), phi.ncols))
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate labels")
        if phi.ncols > max_ground_set:
            raise GroundSetTooLarge("ground set of size %d exceeds the limit %d" % (phi.ncols, max_ground_set))
        self.phi = phi
        self.labels = labels
        self.field = field
        self.max_ground_set = max_ground_set
        self._cols = phi.columns()
        self._rank = {0: 0}
        self._memo = {}

    @classmethod
    def from_columns(cls, columns, w_dim, **kw):
        return cls(Matrix.from_columns(columns, w_dim), **kw)

    @property
    def size(self):
        return self.phi.ncols

    @property
    def w_dim(self):
        return self.phi.nrows

    @property
    def ground(self):
        return tuple(range(self.size))

    def column(self, a):
        return self._cols[a]

    def columns(self, A):
        return [self._cols[a] for a in A]

    def span(self, A):
        """V_A as a Subspace of W."""
        key = ("span", mask_of(A))
        if key not in self._memo:
            self._memo[key] = Subspace.span(self.columns(A), self.w_dim)
        return self._memo[key]

    def names(self, A):
        return tuple(self.labels[a] for a in A)

    def index(self, label):
        return self.labels.index(str(label))

    def subset(self, labels):
        """Sorted index tuple for an iterable of labels."""
        return tuple(sorted(self.index(x) for x in labels))

    def fmt(self, A):
        return "{" + ",".join(self.names(A)) + "}"

    def memo(self, key, fn):
        # idempotent fill: a concurrent duplicate computes the same value
        try:
            return self._memo[key]
        except KeyError:
            v = fn()
            self._memo[key] = v
            return v

    def __repr__(self):
        return "Representation(%d elements in %s^%d)" % (self.size, self.field, self.w_dim)


def _check(rep, A):
    for a in A:
        if not (isinstance(a, int) and 0 <= a < rep.size):
            raise IndexError("element %r outside ground set of size %d" % (a, rep.size))


def rank_of(rep, A):
    _check(rep, A)
    m = mask_of(A)
    r = rep._rank.get(m)
    if r is None:
        r = matrix_rank(Matrix.from_columns(rep.columns(subset_of(m)), rep.w_dim))
        rep._rank[m] = r
    return r


def rank_mask(rep, m):
    r = rep._rank.get(m)
    if r is None:
        r = rank_of(rep, subset_of(m))
    return r


def level_of(rep, A):
    return len(A) - rank_of(rep, A) - 1


def is_independent(rep, A):
    return rank_of(rep, A) == len(A)


def complement(rep, A):
    s = set(A)
    return tuple(a for a in rep.ground if a not in s)


def dual_rank(rep, A):
    return len(A) - rank_of(rep, rep.ground) + rank_of(rep, complement(rep, A))


def closure(rep, X):
    r = rank_of(rep, X)
    xs = set(X)
    return tuple(sorted(xs | {e for e in rep.ground if e not in xs and rank_of(rep, tuple(sorted(xs | {e}))) == r}))


def dual_closure(rep, X):
    """Closure of X in the dual matroid, computed from the primal rank."""
    r = dual_rank(rep, X)
    xs = set(X)
    extra = {e for e in rep.ground if e not in xs and dual_rank(rep, tuple(sorted(xs | {e}))) == r}
    return tuple(sorted(xs | extra))


def circuits(rep):
    """All minimal dependent sets, sorted lexicographically."""
    def compute():
        rS = rank_of(rep, rep.ground)
        found = []
        for k in range(1, min(rS + 1, rep.size) + 1):
            for A in combinations(rep.ground, k):
                m = mask_of(A)
                if any(c & m == c for c in found):
                    continue
                if rank_mask(rep, m) < k:
                    found.append(m)
        return tuple(sorted(subset_of(m) for m in found))
    return rep.memo("circuits", compute)


@dataclass(frozen=True)
class TFlatRecord:
    set: tuple
    level: int
    rank: int
    t_parts: tuple = dc_field(default=())


def _tflat_masks(rep):
    def compute():
        circ = [mask_of(c) for c in circuits(rep)]
        flats = set(circ)
        frontier = set(circ)
        while frontier:
            nxt = set()
            for a in frontier:
                for c in circ:
                    u = a | c
                    if u not in flats:
                        nxt.add(u)
            flats |= nxt
            frontier = nxt
        return frozenset(flats)
    return rep.memo("tflat_masks", compute)


def is_tflat(rep, A):
    return mask_of(A) in _tflat_masks(rep)


def tflats_by_level(rep):
    """dict level -> sorted list of T-flats (index tuples)."""
    def compute():
        out = {}
        for m in _tflat_masks(rep):
            A = subset_of(m)
            out.setdefault(level_of(rep, A), []).append(A)
        return {n: sorted(v) for n, v in sorted(out.items())}
    return rep.memo("tflats_by_level", compute)


def tflats_of_level(rep, n):
    if n == -1:
        return [(a,) for a in rep.ground]
    return tflats_by_level(rep).get(n, [])


def t_flats(rep):
    """TFlatRecords grouped by level (dict level -> list)."""
    out = {}
    for n, flats in tflats_by_level(rep).items():
        out[n] = [TFlatRecord(A, n, rank_of(rep, A), tuple(t_parts(rep, A))) for A in flats]
    return out


def maximal_subflats(rep, A):
    """The T-flats of level n-1 contained in the T-flat A of level n."""
    n = level_of(rep, A)
    if n == 0:
        return [(a,) for a in A]
    s = set(A)
    return [J for J in tflats_of_level(rep, n - 1) if s.issuperset(J)]


def t_parts(rep, A):
    """T-parts A minus A_i over the level-(n-1) T-flats A_i inside A.

    For a circuit the A_i are its singletons, so the parts are the sets
    A minus one element.  Sorted by smallest element.
    """
    A = tuple(sorted(A))
    if not is_tflat(rep, A):
        raise ValueError("%s is not a T-flat" % rep.fmt(A))
    parts = []
    for J in maximal_subflats(rep, A):
        js = set(J)
        parts.append(tuple(a for a in A if a not in js))
    return sorted(parts, key=lambda p: (p[0] if p else -1, p))


def connected_components(rep, A):
    """Finest direct-sum decomposition of A (components sorted)."""
    A = tuple(sorted(A))
    _check(rep, A)
    parent = {a: a for a in A}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    s = set(A)
    for c in circuits(rep):
        if s.issuperset(c):
            r = find(c[0])
            for x in c[1:]:
                rx = find(x)
                if rx != r:
                    parent[rx] = r
    groups = {}
    for a in A:
        groups.setdefault(find(a), []).append(a)
    return sorted(tuple(g) for g in groups.values())


def is_connected(rep, A):
    return len(A) > 0 and len(connected_components(rep, A)) == 1


def is_direct_sum(rep, A, parts):
    """Disjoint cover of A whose ranks add up."""
    flat = [a for p in parts for a in p]
    if sorted(flat) != sorted(A) or len(set(flat)) != len(flat):
        return False
    return rank_of(rep, tuple(sorted(A))) == sum(rank_of(rep, tuple(sorted(p))) for p in parts)


@dataclass(frozen=True)
class MinorView:
    kind: str
    Y: tuple
    derived: Representation
    projection: Matrix = None


def restrict(rep, Y):
    Y = tuple(sorted(Y))
    _check(rep, Y)
    cols = rep.columns(Y)
    derived = Representation(Matrix.from_columns(cols, rep.w_dim), labels=rep.names(Y),
                             field=rep.field, max_ground_set=rep.max_ground_set)
    return MinorView("restriction", Y, derived)


def quotient_projection(rep, X):
    """Projection W -> W / V_X in the coordinates of the non-pivot positions
    of the RREF basis of V_X."""
    V = rep.span(X)
    w = rep.w_dim
    piv = V.pivots
    nonpiv = [j for j in range(w) if j not in piv]
    zero, one = rep.field(0), rep.field(1)
    cols = []
    for j in range(w):
        col = [zero] * len(nonpiv)
        if j in piv:
            row = V.basis.rows[piv.index(j)]
            for k, q in enumerate(nonpiv):
                col[k] = -row[q]
        else:
            col[nonpiv.index(j)] = one
        cols.append(col)
    return Matrix.from_columns(cols, len(nonpiv))


def contract(rep, Y):
    """phi.Y = pi o (phi|Y) with pi: W -> W / V_{S minus Y}."""
    Y = tuple(sorted(Y))
    _check(rep, Y)
    pi = quotient_projection(rep, complement(rep, Y))
    cols = [pi.apply(c) for c in rep.columns(Y)]
    derived = Representation(Matrix.from_columns(cols, pi.nrows), labels=rep.names(Y),
                             field=rep.field, max_ground_set=rep.max_ground_set)
    return MinorView("contraction", Y, derived, pi)


def b_of(rep, Y, A):
    """S minus the dual closure of Y minus A: the largest T-flat meeting Y in A
    when A is a T-flat of the contraction to Y."""
    Y = tuple(sorted(Y))
    a = set(A)
    return complement(rep, dual_closure(rep, tuple(y for y in Y if y not in a)))


def lex_basis(rep, A):
    """Lexicographically first maximal independent subset of A (greedy)."""
    def compute():
        chosen = []
        r = 0
        for a in sorted(A):
            if rank_of(rep, tuple(chosen + [a])) > r:
                chosen.append(a)
                r += 1
        return tuple(chosen)
    return rep.memo(("lex_basis", mask_of(A)), compute)
