"""
Multigraded T-resolutions of a presentation Phi: E -> G of free modules
over k[x_1..x_m], given by its scalar matrix and the degrees of the bases.

Entries of Phi are c * x^(deg source - deg target).  The resolution has
T_0 = G, T_1 = E and T_n = sum over T-flats of level n-2 of T_I with
generators in degree lcm(deg a : a in I).
"""

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .field import QQ
from .linalg import Matrix, rank as matrix_rank
from .matroid import Representation, rank_of, restrict
from .tcomplex import (
    Check, VectorSpaceComplex, _labels, build_T_plus, complex_length, homology, t_differential,
)


# -- multidegrees ----------------------------------------------------------------

def deg_le(a, b):
    return all(x <= y for x, y in zip(a, b))


def deg_join(*degs):
    return tuple(max(c) for c in zip(*degs))


def deg_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def join_closure(degrees):
    """All lcms of nonempty subsets of `degrees`, sorted."""
    out = set(tuple(d) for d in degrees)
    frontier = set(out)
    while frontier:
        new = set()
        for a in frontier:
            for b in out:
                j = deg_join(a, b)
                if j not in out:
                    new.add(j)
        out |= new
        frontier = new
    return sorted(out)


# -- presentations ------------------------------------------------------------------

class PresentationError(ValueError):
    pass


class MultigradedPresentation(object):

    def __init__(self, scalar_matrix, source_degrees, target_degrees, field=QQ,
                 labels=None, ring_vars=None, max_ground_set=None):
        if not isinstance(scalar_matrix, Matrix):
            scalar_matrix = Matrix([[field(x) for x in row] for row in scalar_matrix],
                                   len(source_degrees))
        self.scalar_matrix = scalar_matrix
        self.source_degrees = [tuple(int(x) for x in d) for d in source_degrees]
        self.target_degrees = [tuple(int(x) for x in d) for d in target_degrees]
        degs = self.source_degrees + self.target_degrees
        self.m = len(degs[0]) if degs else len(ring_vars or ())
        if any(len(d) != self.m for d in degs):
            raise PresentationError("multidegrees of differing lengths")
        if scalar_matrix.shape != (len(self.target_degrees), len(self.source_degrees)):
            raise PresentationError("matrix is %dx%d but %d target and %d source degrees given" % (
                scalar_matrix.nrows, scalar_matrix.ncols, len(self.target_degrees), len(self.source_degrees)))
        self.field = field
        self.ring_vars = list(ring_vars) if ring_vars else default_vars(self.m)
        if len(self.ring_vars) != self.m:
            raise PresentationError("%d ring variables for multidegrees of length %d" % (len(self.ring_vars), self.m))
        kw = {} if max_ground_set is None else {"max_ground_set": max_ground_set}
        self.rep = Representation(scalar_matrix, labels=labels, field=field, **kw)

    @property
    def labels(self):
        return self.rep.labels

    def entry(self, i, j):
        c = self.scalar_matrix[i, j]
        if not c:
            return None
        return c, deg_sub(self.source_degrees[j], self.target_degrees[i])

    def __repr__(self):
        return "MultigradedPresentation(%dx%d, m=%d)" % (
            self.scalar_matrix.nrows, self.scalar_matrix.ncols, self.m)


def default_vars(m):
    if m <= 3:
        return list("xyz"[:m])
    return ["x%d" % (i + 1) for i in range(m)]


def validate(p):
    """Positions (i, j) where a nonzero scalar sits below a non-homogeneous slot."""
    bad = []
    for i, t in enumerate(p.target_degrees):
        for j, s in enumerate(p.source_degrees):
            if p.scalar_matrix[i, j] and not deg_le(t, s):
                bad.append((i, j, "source degree %s is not >= target degree %s" % (s, t)))
    return bad


def deg_of_set(p, I):
    if not I:
        raise ValueError("degree of the empty set is undefined")
    return deg_join(*[p.source_degrees[a] for a in I])


def change_basis(p, Q, source_degrees):
    """Presentation with E re-based by the scalar matrix Q: the new basis
    vector j is sum_i Q[i][j] x^(d'_j - d_i) e_i where d' are the new source
    degrees.  Rejected unless every such monomial exists."""
    if not isinstance(Q, Matrix):
        Q = Matrix([[p.field(x) for x in row] for row in Q])
    n = len(p.source_degrees)
    if Q.shape != (n, n) or matrix_rank(Q) != n:
        raise PresentationError("column change must be an invertible %dx%d matrix" % (n, n))
    for i in range(n):
        for j in range(n):
            if Q[i, j] and not deg_le(p.source_degrees[i], source_degrees[j]):
                raise PresentationError("column change entry (%d,%d) breaks homogeneity" % (i, j))
    q = MultigradedPresentation(p.scalar_matrix @ Q, source_degrees, p.target_degrees,
                                field=p.field, labels=p.labels, ring_vars=p.ring_vars)
    bad = validate(q)
    if bad:
        raise PresentationError("column change gives a non-homogeneous presentation at %s" % (bad[0][:2],))
    return q


# -- polynomial text ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)(?:\s*\^\s*(\d+))?\s*$")


def parse_monomial(text, ring_vars, field=QQ):
    """'2*x*y^3' -> (2, (1, 3, ...)).  Only single terms are accepted."""
    s = text.strip().replace("**", "^")
    if not s:
        raise PresentationError("empty entry")
    if s in ("0", "-0"):
        return field(0), None
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        s = s[1:].strip()
    exp = [0] * len(ring_vars)
    coeff = Fraction(1)
    for part in s.split("*"):
        part = part.strip()
        if not part:
            raise PresentationError("malformed monomial %r" % text)
        if re.fullmatch(r"\d+(/\d+)?", part):
            coeff *= Fraction(part)
            continue
        mt = _TOKEN.match(part)
        if not mt or mt.group(1) not in ring_vars:
            raise PresentationError("unknown factor %r in %r (only single monomials over %s)"
                                    % (part, text, ",".join(ring_vars)))
        exp[ring_vars.index(mt.group(1))] += int(mt.group(2) or 1)
    c = field(sign * coeff)
    return c, tuple(exp) if c else None


def presentation_from_poly_matrix(rows, ring_vars, source_degrees, target_degrees, field=QQ, labels=None):
    """Read a matrix of monomial strings, checking each entry has the exponent
    dictated by the degrees."""
    scal = []
    for i, row in enumerate(rows):
        if len(row) != len(source_degrees):
            raise PresentationError("row %d has %d entries, expected %d" % (i + 1, len(row), len(source_degrees)))
        out = []
        for j, t in enumerate(row):
            try:
                c, e = parse_monomial(str(t), ring_vars, field)
            except PresentationError as err:
                raise PresentationError("entry (%d,%d): %s" % (i + 1, j + 1, err))
            if c:
                want = deg_sub(tuple(source_degrees[j]), tuple(target_degrees[i]))
                if e != want:
                    raise PresentationError("entry (%d,%d) has exponent %s, degrees require %s"
                                            % (i + 1, j + 1, e, want))
            out.append(c)
        scal.append(out)
    return MultigradedPresentation(Matrix(scal, len(source_degrees)), source_degrees, target_degrees,
                                   field=field, labels=labels, ring_vars=ring_vars)


def format_monomial(c, exp, ring_vars):
    parts = ["%s^%d" % (v, e) if e > 1 else v for v, e in zip(ring_vars, exp) if e]
    cs = str(c)
    if not parts:
        return cs
    if cs == "1":
        return "*".join(parts)
    if cs == "-1":
        return "-" + "*".join(parts)
    return cs + "*" + "*".join(parts)


# -- free complexes ---------------------------------------------------------------------

class FreeComplex(object):
    """Complex of free multigraded modules.

    components[n] is a list of (label, degree) pairs; differentials[n] a dict
    {(i, j): (c, exp)} of the nonzero entries of d_n, meaning c * x^exp.
    """

    def __init__(self, components, differentials, m, field=QQ, ring_vars=None):
        self.components = {n: [(tuple(l) if isinstance(l, list) else l, tuple(d)) for l, d in v]
                           for n, v in components.items()}
        self.differentials = {n: dict(v) for n, v in differentials.items()}
        self.m = m
        self.field = field
        self.ring_vars = list(ring_vars) if ring_vars else default_vars(m)

    def indices(self):
        return sorted(self.components)

    def rank(self, n):
        return len(self.components.get(n, ()))

    def degrees(self, n):
        return [d for _, d in self.components.get(n, ())]

    @property
    def length(self):
        nz = [n for n in self.indices() if self.rank(n)]
        return nz[-1] if nz else 0

    def scalar_matrix(self, n, rows=None, cols=None):
        rows = range(self.rank(n - 1)) if rows is None else rows
        cols = range(self.rank(n)) if cols is None else cols
        ent = self.differentials.get(n, {})
        zero = self.field(0)
        return Matrix([[ent[(i, j)][0] if (i, j) in ent else zero for j in cols] for i in rows], len(cols))

    def betti(self):
        return {n: self.rank(n) for n in self.indices() if self.rank(n)}

    def homogeneity_failures(self):
        bad = []
        for n, ent in self.differentials.items():
            for (i, j), (c, e) in ent.items():
                want = deg_sub(self.components[n][j][1], self.components[n - 1][i][1])
                if tuple(e) != want or min(want, default=0) < 0:
                    bad.append((n, i, j))
        return bad

    def __repr__(self):
        return "FreeComplex(betti=%s)" % self.betti()


def _compose(a, b):
    """Sparse polynomial product of d_{n-1} (a) and d_n (b)."""
    out = {}
    bycol = {}
    for (k, j), v in b.items():
        bycol.setdefault(k, []).append((j, v))
    for (i, k), (c1, e1) in a.items():
        for j, (c2, e2) in bycol.get(k, ()):
            term = out.setdefault((i, j), {})
            e = tuple(x + y for x, y in zip(e1, e2))
            term[e] = term.get(e, 0) + c1 * c2
    return {ij: {e: c for e, c in poly.items() if c} for ij, poly in out.items()}


def dd_failures(fc):
    bad = []
    for n in fc.indices():
        if n - 1 in fc.differentials and n in fc.differentials:
            prod = _compose(fc.differentials[n - 1], fc.differentials[n])
            if any(poly for poly in prod.values()):
                bad.append(n)
    return bad


def build_resolution(p):
    """The T-resolution of (Phi, S) as a FreeComplex."""
    bad = validate(p)
    if bad:
        raise PresentationError("presentation is not multihomogeneous at (%d,%d)" % bad[0][:2])
    rep = p.rep
    comps = {
        0: [(("G", str(i + 1), 0), d) for i, d in enumerate(p.target_degrees)],
        1: [(("E", rep.labels[a], 0), d) for a, d in enumerate(p.source_degrees)],
    }
    lam = complex_length(rep)
    for n in range(0, lam + 1):
        labs = _labels(rep, n)
        comps[n + 2] = [(lab, deg_of_set(p, rep.subset(lab[1]))) for lab in labs]
    diffs = {}
    mats = {1: p.scalar_matrix}
    for n in range(0, lam + 1):
        mats[n + 2] = t_differential(rep, n)
    for n, M in mats.items():
        ent = {}
        for i, row in enumerate(M.rows):
            for j, c in enumerate(row):
                if c:
                    ent[(i, j)] = (c, deg_sub(comps[n][j][1], comps[n - 1][i][1]))
        diffs[n] = ent
    return FreeComplex(comps, diffs, p.m, p.field, p.ring_vars)


def strand(fc, a):
    """The degree-a part of fc as a complex of vector spaces: generators of
    degree <= a, with each entry replaced by its scalar."""
    keep = {n: [i for i, (_, d) in enumerate(fc.components[n]) if deg_le(d, a)] for n in fc.indices()}
    comps = {n: [fc.components[n][i][0] for i in keep[n]] for n in fc.indices()}
    diffs = {}
    for n in fc.indices():
        if n - 1 in keep:
            diffs[n] = fc.scalar_matrix(n, keep[n - 1], keep[n])
    return VectorSpaceComplex(comps, diffs, fc.field, "strand%s" % (tuple(a),))


def strand_matches_restriction(p, fc, a):
    """Compare the strand at a with T(phi|I_a)^+ in homological degrees >= 1."""
    I = tuple(j for j, d in enumerate(p.source_degrees) if deg_le(d, a))
    st = strand(fc, a)
    Tp = build_T_plus(restrict(p.rep, I).derived)
    def rename(lab):
        return ("U",) + tuple(lab[1:]) if lab[0] == "E" else lab
    for n in fc.indices():
        if n == 0:
            continue
        mine = [rename(l) for l in st.components.get(n, [])]
        if mine != Tp.components.get(n, []):
            return False
        if n >= 2 and st.d(n) != Tp.d(n):
            return False
    # degree 1 map: columns I, rows the G generators of degree <= a
    rows = [i for i, d in enumerate(p.target_degrees) if deg_le(d, a)]
    return st.d(1) == Tp.d(1).submatrix(rows, range(len(I)))


@dataclass
class ResolutionReport:
    field: str
    betti: dict
    length: int
    bound: int
    rank_L: int
    checks: list = dc_field(default_factory=list)
    strands_checked: int = 0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]


def verify_free_complex(fc):
    """Checks that depend only on the complex itself, so a complex read back
    from a file gives the same report."""
    checks = []
    bad = fc.homogeneity_failures()
    checks.append(Check("multihomogeneous", not bad,
                        "bad entries %s" % bad[:3] if bad else "every exponent is the degree difference",
                        bad[0][0] if bad else None))
    bad = dd_failures(fc)
    checks.append(Check("dd_zero_symbolic", not bad,
                        "d o d nonzero in degrees %s" % bad if bad else "all compositions vanish as polynomials",
                        bad[0] if bad else None))
    degs = [d for n in (0, 1) for d in fc.degrees(n)]
    pts = join_closure(degs) if degs else []
    witness = None
    for a in pts:
        h = homology(strand(fc, a))
        nz = h.nonzero_above(0)
        if nz or h.dd_failures:
            witness = (a, nz[0] if nz else h.dd_failures[0], h.homology)
            break
    checks.append(Check("strands_exact_above_0", witness is None,
                        "%d strands exact" % len(pts) if witness is None else
                        "strand %s has homology %s" % (witness[0], witness[2]),
                        None if witness is None else witness[1]))
    b0, b1 = fc.rank(0), fc.rank(1)
    r1 = matrix_rank(fc.scalar_matrix(1)) if b0 and b1 else 0
    rank_L = b0 - r1
    bound = b1 - b0 + rank_L + 1
    length = fc.length
    checks.append(Check("pd_bound", length <= bound,
                        "length %d <= %d = b1 - b0 + rank L + 1" % (length, bound) if length <= bound
                        else "length %d exceeds %d" % (length, bound), length))
    return ResolutionReport(str(fc.field), fc.betti(), length, bound, rank_L, checks, len(pts))


def verify_resolution(p, fc=None):
    fc = fc or build_resolution(p)
    rep = verify_free_complex(fc)
    lam = len(p.source_degrees) - rank_of(p.rep, p.rep.ground) + 1
    rep.checks.append(Check("length_at_most_lambda", fc.length <= lam,
                            "length %d, lambda %d" % (fc.length, lam), fc.length))
    pts = join_closure(p.source_degrees + p.target_degrees) if (p.source_degrees or p.target_degrees) else []
    bad = [a for a in pts if not strand_matches_restriction(p, fc, a)]
    rep.checks.append(Check("strands_match_restrictions", not bad,
                            "all %d strands agree with the restricted augmented complex" % len(pts) if not bad
                            else "strand %s differs" % (bad[0],)))
    return rep
