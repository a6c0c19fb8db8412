"""
T-spaces, the maps phi_n^{IJ}, and the complexes T(phi) and T(phi)^+.

A T-space T_I = S_I^* (x) top(U_I) (x) top(V_I)^* is stored through its
basis s_k^* (x) e_I (x) omega_I where s_k^* are the coordinate functionals of
the RREF basis of S_I, e_I is the wedge of e_a over I in ground-set order
and omega_I is the top form on V_I taking the value 1 on the wedge of the
columns over the lex-first basis of I.  Every map between T-spaces is then
a scalar multiple of a transposed multiplication matrix.
"""

from dataclasses import dataclass, field as dc_field

from .linalg import Matrix, det, rank as matrix_rank, rref, Subspace, kernel_basis
from .matroid import (
    connected_components, is_independent, is_tflat, level_of, lex_basis,
    maximal_subflats, rank_of, restrict, tflats_of_level,
)
from .multiplicity import intersection_generator, multiplicity_space, nu_matrix


# -- small multilinear helpers ------------------------------------------------

def shuffle_sign(first, second):
    """sigma with e_sorted = sigma * (e_first ^ e_second)."""
    seq = list(first) + list(second)
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def top_form_ratio(vectors, basis):
    """The scalar c with v_1 ^ ... ^ v_r = c * (b_1 ^ ... ^ b_r), all vectors
    lying in the span of the independent rows `basis`."""
    if len(vectors) != len(basis):
        raise ValueError("wedge degree mismatch: %d vs %d" % (len(vectors), len(basis)))
    if not basis:
        return 1
    _, piv = rref(Matrix(basis))
    if len(piv) != len(basis):
        raise ValueError("basis rows are dependent")
    B = Matrix([[b[p] for p in piv] for b in basis], len(piv))
    V = Matrix([[v[p] for p in piv] for v in vectors], len(piv))
    return det(V) / det(B)


def omega(rep, I, vectors):
    """omega_I evaluated on the wedge of `vectors` (which must span inside V_I)."""
    return top_form_ratio([tuple(v) for v in vectors], rep.columns(lex_basis(rep, I)))


# -- T-spaces ------------------------------------------------------------------

@dataclass(frozen=True)
class TSpaceBasis:
    I: tuple
    level: int
    dim: int
    u_wedge: tuple        # ordered elements of I
    v_dual_wedge: tuple   # lex-first basis of I whose column wedge omega_I evaluates to 1


def t_space(rep, I):
    I = tuple(sorted(I))
    if len(I) == 1 and not is_tflat(rep, I):
        return TSpaceBasis(I, -1, 1, I, ())
    n = level_of(rep, I)
    d = multiplicity_space(rep, I).dim if is_tflat(rep, I) else 0
    return TSpaceBasis(I, n, d, I, lex_basis(rep, I))


# -- the maps phi_n^{IJ} ---------------------------------------------------------

def _extend_to_basis(rep, g, A):
    """Columns of A, chosen greedily, completing g to a basis of V_A."""
    chosen = []
    cur = [g]
    target = rank_of(rep, A)
    for a in A:
        if len(cur) == target:
            break
        c = rep.column(a)
        if matrix_rank(Matrix(cur + [c])) == len(cur) + 1:
            cur.append(c)
            chosen.append(c)
    if len(cur) != target:
        raise AssertionError("could not extend the generator to a basis")
    return chosen


def _phi0_scalar(rep, I, a):
    rest = tuple(x for x in I if x != a)
    sign = shuffle_sign((a,), rest)
    # d, then tau, then wedge(phi) paired against omega_I by mu
    return sign * omega(rep, I, rep.columns(rest))


def _phi_scalar(rep, I, J, g):
    """Scalar c with phi_n^{IJ} = c * Delta (x) id on the chosen bases.

    d: e_I -> sigma e_{I-J} (x) e_J.
    a: omega_I -> omega_I(z ^ x_J) kappa (x) omega_J, where z lifts a basis of
       K_IJ from V_{I-J}, kappa(z) = 1 and x_J are the columns over the
       lex-first basis of J (so omega_J(x_J) = 1).
    b: g^* (x) kappa -> eta with eta(g ^ z) = 1.
    mu(eta (x) wedge(phi)(e_{I-J})) = ratio of the column wedge over I-J to g ^ z.
    """
    js = set(J)
    rest = tuple(x for x in I if x not in js)
    sigma = shuffle_sign(rest, J)
    z = _extend_to_basis(rep, g, rest)
    a_scalar = omega(rep, I, z + rep.columns(lex_basis(rep, J)))
    mu_b = top_form_ratio(rep.columns(rest), [g] + z)
    return sigma * a_scalar * mu_b


def phi_IJ(rep, I, J):
    """Matrix of phi_n^{IJ}: T_I -> T_J (rows index T_J)."""
    I, J = tuple(sorted(I)), tuple(sorted(J))
    if not is_tflat(rep, I):
        raise ValueError("%s is not a T-flat" % rep.fmt(I))
    n = level_of(rep, I)
    F = rep.field
    if n == 0:
        if len(J) != 1 or J[0] not in I:
            raise ValueError("for a circuit J must be one of its elements")
        return Matrix([[F(_phi0_scalar(rep, I, J[0]))]], 1)
    N = nu_matrix(rep, I, J)  # validates the pair
    js = set(J)
    rest = tuple(x for x in I if x not in js)
    g = intersection_generator(rep, I, J)
    if g is None or not is_independent(rep, rest):
        return Matrix.zeros(N.ncols, N.nrows, F(0))
    return N.T.scale(F(_phi_scalar(rep, I, J, g)))


# -- complexes -----------------------------------------------------------------------

class VectorSpaceComplex(object):
    """Chain complex of finite dimensional spaces with labeled bases.

    components[n] is the list of basis labels in homological degree n and
    differentials[n] the matrix of d_n: C_n -> C_{n-1} (rows = C_{n-1}).
    """

    def __init__(self, components, differentials, field, name=""):
        self.components = {n: list(v) for n, v in components.items()}
        self.differentials = dict(differentials)
        self.field = field
        self.name = name
        for n, m in self.differentials.items():
            if m.shape != (self.dim(n - 1), self.dim(n)):
                raise ValueError("d_%d has shape %s, expected %s" % (n, m.shape, (self.dim(n - 1), self.dim(n))))

    def dim(self, n):
        return len(self.components.get(n, ()))

    def dims(self):
        return {n: self.dim(n) for n in self.indices()}

    def indices(self):
        return sorted(self.components)

    @property
    def lowest(self):
        nz = [n for n in self.indices() if self.dim(n)]
        return nz[0] if nz else None

    @property
    def highest(self):
        nz = [n for n in self.indices() if self.dim(n)]
        return nz[-1] if nz else None

    def d(self, n):
        m = self.differentials.get(n)
        if m is None:
            return Matrix.zeros(self.dim(n - 1), self.dim(n), self.field(0))
        return m

    def dd_failures(self):
        """Degrees n where d_{n-1} d_n is nonzero."""
        bad = []
        for n in self.indices():
            a, b = self.d(n - 1), self.d(n)
            if a.ncols and b.nrows and a.nrows and b.ncols and not (a @ b).is_zero():
                bad.append(n)
        return bad

    def homology(self):
        return homology(self)

    def __repr__(self):
        return "VectorSpaceComplex(%s, dims=%s)" % (self.name, self.dims())


def _rank(m):
    return matrix_rank(m) if m.nrows and m.ncols else 0


@dataclass
class HomologyReport:
    dims: dict
    rank_out: dict
    rank_in: dict
    homology: dict
    dd_failures: list = dc_field(default_factory=list)

    def nonzero_above(self, k=0):
        return [n for n, h in sorted(self.homology.items()) if n > k and h]


def homology(c):
    dims, rout, rin, hom = {}, {}, {}, {}
    for n in c.indices():
        dims[n] = c.dim(n)
        rout[n] = _rank(c.d(n))
        rin[n] = _rank(c.d(n + 1)) if (n + 1) in c.components else 0
        hom[n] = dims[n] - rout[n] - rin[n]
        if hom[n] < 0:
            raise AssertionError("negative homology at %d: d o d is not zero" % n)
    return HomologyReport(dims, rout, rin, hom, c.dd_failures())


def _t_label(rep, I, k):
    return ("T", rep.names(I), k)


def _t_blocks(rep, n):
    """[(I, dim)] for the nonzero T-spaces of level n, in sorted order."""
    if n == -1:
        return [((a,), 1) for a in rep.ground]
    out = []
    for I in tflats_of_level(rep, n):
        d = multiplicity_space(rep, I).dim
        if d:
            out.append((I, d))
    return out


def _labels(rep, n):
    if n == -1:
        return [("U", rep.labels[a], 0) for a in rep.ground]
    return [_t_label(rep, I, k) for I, d in _t_blocks(rep, n) for k in range(d)]


def t_differential(rep, n):
    """phi_n: T_n -> T_{n-1} with the sign (-1)^{|J|} on each block."""
    def compute():
        src = _t_blocks(rep, n)
        dst = _t_blocks(rep, n - 1)
        offs, o = {}, 0
        for J, d in dst:
            offs[J] = o
            o += d
        ncols = sum(d for _, d in src)
        F = rep.field
        rows = [[F(0)] * ncols for _ in range(o)]
        c0 = 0
        for I, dI in src:
            subs = [(a,) for a in I] if n == 0 else maximal_subflats(rep, I)
            for J in subs:
                if J not in offs:
                    continue
                blk = phi_IJ(rep, I, J)
                sgn = -1 if len(J) % 2 else 1
                r0 = offs[J]
                for i, row in enumerate(blk.rows):
                    for j, x in enumerate(row):
                        if x:
                            rows[r0 + i][c0 + j] = rows[r0 + i][c0 + j] + sgn * x
            c0 += dI
        return Matrix(rows, ncols)
    return rep.memo(("tdiff", n), compute)


def complex_length(rep):
    return rep.size - rank_of(rep, rep.ground) - 1


def build_T(rep):
    """T(phi) in degrees 0..lambda."""
    lam = complex_length(rep)
    comps = {n: _labels(rep, n) for n in range(0, max(lam, -1) + 1)}
    diffs = {n: t_differential(rep, n) for n in range(1, lam + 1)}
    return VectorSpaceComplex(comps, diffs, rep.field, "T")


def build_T_plus(rep):
    """T(phi)^+: degree 0 is W, degree 1 is U_S, degree n+2 is T_n."""
    lam = complex_length(rep)
    comps = {0: [("W", str(i + 1), 0) for i in range(rep.w_dim)], 1: _labels(rep, -1)}
    diffs = {1: rep.phi}
    for n in range(0, lam + 1):
        comps[n + 2] = _labels(rep, n)
        diffs[n + 2] = t_differential(rep, n)
    return VectorSpaceComplex(comps, diffs, rep.field, "T+")


def augmentation(rep):
    """phi_0: T_0 -> U_S."""
    return t_differential(rep, 0)


def restrict_complex(rep, Y):
    """Sub-complex of T(phi) on the T-spaces indexed by subsets of Y."""
    T = build_T(rep)
    keep = set(rep.names(tuple(sorted(Y))))
    comps, idx = {}, {}
    for n in T.indices():
        sel = [i for i, lab in enumerate(T.components[n]) if set(lab[1]) <= keep]
        idx[n] = sel
        comps[n] = [T.components[n][i] for i in sel]
    diffs = {}
    for n, m in T.differentials.items():
        diffs[n] = m.submatrix(idx[n - 1], idx[n])
    return VectorSpaceComplex(comps, diffs, rep.field, "T|Y")


def same_complex(a, b):
    """Identical labeled bases and identical matrices."""
    ia = [n for n in a.indices() if a.dim(n)]
    ib = [n for n in b.indices() if b.dim(n)]
    if ia != ib:
        return False
    for n in ia:
        if a.components[n] != b.components[n]:
            return False
        if a.d(n) != b.d(n):
            return False
    return True


def direct_sum_split(rep):
    """T(phi|S_i) for the connected components S_i of the ground set."""
    comps = connected_components(rep, rep.ground)
    return [build_T(restrict(rep, c).derived) for c in comps]


def check_direct_sum(rep):
    """The summands reassemble T(phi): same labeled bases and block matrices,
    with zero blocks between different components."""
    T = build_T(rep)
    parts = direct_sum_split(rep)
    for n in T.indices():
        labels = [lab for p in parts for lab in p.components.get(n, [])]
        if sorted(labels) != sorted(T.components[n]):
            return False
    pos = {n: {lab: i for i, lab in enumerate(T.components[n])} for n in T.indices()}
    owner = {}
    for k, p in enumerate(parts):
        for n in p.indices():
            for lab in p.components[n]:
                owner[(n, lab)] = k
    for n, m in T.differentials.items():
        for j, cl in enumerate(T.components[n]):
            for i, rl in enumerate(T.components[n - 1]):
                if owner[(n, cl)] != owner[(n - 1, rl)] and m[i, j]:
                    return False
        for p in parts:
            if n not in p.differentials:
                continue
            pm = p.d(n)
            rows = [pos[n - 1][lab] for lab in p.components[n - 1]]
            cols = [pos[n][lab] for lab in p.components[n]]
            if m.submatrix(rows, cols) != pm:
                return False
    return True


# -- verification ------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    degree: int = None


@dataclass
class VerificationReport:
    field: str
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]


def verify_acyclic(rep):
    """Complex property and acyclicity checks for T(phi) and T(phi)^+."""
    T, Tp = build_T(rep), build_T_plus(rep)
    checks = []
    for name, c in (("T", T), ("T+", Tp)):
        bad = c.dd_failures()
        checks.append(Check("%s.dd_zero" % name, not bad,
                            "d o d nonzero in degrees %s" % bad if bad else "all compositions vanish",
                            bad[0] if bad else None))
    hT, hp = homology(T), homology(Tp)
    bad = hT.nonzero_above(0)
    checks.append(Check("T.exact_above_0", not bad,
                        "homology %s" % {n: hT.homology[n] for n in sorted(hT.homology)}, bad[0] if bad else None))
    ker = kernel_basis(rep.phi, rep.field(1)) if rep.size else Subspace.zero(0)
    h0 = hT.homology.get(0, 0)
    checks.append(Check("T.h0_is_kernel", h0 == ker.dim,
                        "dim H0 = %d, dim Ker phi = %d" % (h0, ker.dim), 0))
    aug = augmentation(rep)
    img = Subspace.span(aug.columns(), rep.size) if aug.ncols else Subspace.zero(rep.size)
    checks.append(Check("T.augmentation_image", img == ker,
                        "image of phi_0 %s Ker phi" % ("equals" if img == ker else "differs from"), 0))
    checks.append(Check("T.augmentation_rank", _rank(aug) == T.dim(0) - hT.rank_in.get(0, 0),
                        "rank phi_0 = %d, dim T_0 - rank phi_1 = %d" % (_rank(aug), T.dim(0) - hT.rank_in.get(0, 0)), 0))
    bad = hp.nonzero_above(0)
    checks.append(Check("T+.exact_above_0", not bad,
                        "homology %s" % {n: hp.homology[n] for n in sorted(hp.homology)}, bad[0] if bad else None))
    want = rep.w_dim - rank_of(rep, rep.ground)
    checks.append(Check("T+.h0_is_cokernel", hp.homology[0] == want,
                        "dim H0 = %d, dim W - rank phi = %d" % (hp.homology[0], want), 0))
    return VerificationReport(str(rep.field), checks)


# -- comparison up to rescaling of basis vectors -------------------------------------

def diagonal_scalings(mats, targets):
    """Find nonzero scalars s[(k, i)] (basis vector i of space k) with
    targets[k][i][j] = s[(k, i)] * mats[k][i][j] / s[(k+1, j)] for each k.

    mats[k] maps space k+1 to space k, so consecutive matrices share the
    scaling of the space between them.  Returns the scalings or None.
    """
    if len(mats) != len(targets):
        return None
    edges = {}
    for k, (A, P) in enumerate(zip(mats, targets)):
        if A.shape != P.shape:
            return None
        for i in range(A.nrows):
            for j in range(A.ncols):
                a, p = A[i, j], P[i, j]
                if bool(a) != bool(p):
                    return None
                if a:
                    # s[k,i] = ratio * s[k+1,j]
                    ratio = p / a
                    edges.setdefault((k, i), []).append(((k + 1, j), ratio))
                    edges.setdefault((k + 1, j), []).append(((k, i), 1 / ratio))
    scale = {}
    for start in list(edges):
        if start in scale:
            continue
        scale[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for v, r in edges[u]:
                val = r * scale[u]
                if v in scale:
                    if scale[v] != val:
                        return None
                else:
                    scale[v] = val
                    stack.append(v)
    return scale


def diagonally_equivalent(A, P):
    return diagonal_scalings([A], [P]) is not None
