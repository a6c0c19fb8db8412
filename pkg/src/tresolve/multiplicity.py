"""
Multiplicity spaces S_I(phi) inside symmetric powers of W, the
multiplication maps nu and their duals, and contraction projections.
"""

from dataclasses import dataclass

from .linalg import Matrix, Subspace, subspace_meet, rank as matrix_rank
from .matroid import (
    b_of, complement, contract, is_independent, is_tflat, level_of,
    maximal_subflats, t_parts, tflats_by_level,
)
from .sym import SymCoords, sym_multiply, sym_power_matrix


@dataclass(frozen=True)
class MultiplicitySpace:
    I: tuple
    level: int
    ambient: SymCoords
    basis: Subspace
    generators: tuple = None

    @property
    def dim(self):
        return self.basis.dim

    def vectors(self):
        return self.basis.vectors()


def intersection_generator(rep, I, J):
    """Canonical generator of V_J meet V_{I minus J} (an RREF row), or None
    when the intersection is zero."""
    def compute():
        js = set(J)
        rest = tuple(a for a in I if a not in js)
        X = subspace_meet(rep.span(J), rep.span(rest))
        if X.dim > 1:
            raise AssertionError("intersection of dimension %d for %s in %s" % (X.dim, rep.fmt(J), rep.fmt(I)))
        return X.basis.rows[0] if X.dim else None
    return rep.memo(("gen", tuple(I), tuple(J)), compute)


def chains(rep, I):
    """Maximal chains of T-flats I0 < I1 < ... < In = I, one tuple each."""
    I = tuple(sorted(I))
    if not is_tflat(rep, I):
        raise ValueError("%s is not a T-flat" % rep.fmt(I))
    n = level_of(rep, I)
    if n == 0:
        return [(I,)]
    out = []
    for J in maximal_subflats(rep, I):
        for c in chains(rep, J):
            out.append(c + (I,))
    return sorted(out)


def chain_vector(rep, chain):
    """Product of the step generators along a chain (zero vector if a step
    intersection vanishes)."""
    one = rep.field(1)
    v = (one,)
    w = rep.w_dim
    for k in range(1, len(chain)):
        g = intersection_generator(rep, chain[k], chain[k - 1])
        if g is None:
            return tuple(rep.field(0) for _ in SymCoords(w, len(chain) - 1).monomials())
        v = sym_multiply(v, g, w, k - 1, 1)
    return v


def multiplicity_space(rep, I, with_chains=False):
    """S_I(phi), built recursively from the spaces of the T-flats one level down."""
    I = tuple(sorted(I))
    n = level_of(rep, I)
    deg = max(n, 0)
    amb = SymCoords(rep.w_dim, deg)

    def compute():
        if not is_tflat(rep, I):
            return Subspace.zero(amb.dim)
        if n == 0:
            return Subspace.span([(rep.field(1),)], 1)
        vecs = []
        for J in maximal_subflats(rep, I):
            g = intersection_generator(rep, I, J)
            if g is None:
                continue
            for t in multiplicity_space(rep, J).vectors():
                vecs.append(sym_multiply(g, t, rep.w_dim, 1, n - 1))
        return Subspace.span(vecs, amb.dim)

    basis = rep.memo(("S", I), compute)
    gens = None
    if with_chains and is_tflat(rep, I):
        gens = tuple((c, chain_vector(rep, c)) for c in chains(rep, I))
    return MultiplicitySpace(I, n, amb, basis, gens)


def multiplicity_dim(rep, I):
    return multiplicity_space(rep, I).dim


def _check_pair(rep, I, J):
    if not is_tflat(rep, I):
        raise ValueError("%s is not a T-flat" % rep.fmt(I))
    n = level_of(rep, I)
    if n < 1:
        raise ValueError("%s has level %d < 1" % (rep.fmt(I), n))
    if not is_tflat(rep, J) or level_of(rep, J) != n - 1 or not set(J) < set(I):
        raise ValueError("%s is not a level-%d T-flat inside %s" % (rep.fmt(J), n - 1, rep.fmt(I)))


def nu_matrix(rep, I, J):
    """Multiplication by the generator of V_J meet V_{I-J}, from the S_J basis
    to the S_I basis (rows index S_I)."""
    I, J = tuple(sorted(I)), tuple(sorted(J))
    _check_pair(rep, I, J)
    SI, SJ = multiplicity_space(rep, I), multiplicity_space(rep, J)
    g = intersection_generator(rep, I, J)
    zero = rep.field(0)
    if g is None:
        return Matrix.zeros(SI.dim, SJ.dim, zero)
    cols = []
    n = SI.level
    for t in SJ.vectors():
        c = SI.basis.coordinates(sym_multiply(g, t, rep.w_dim, 1, n - 1))
        if c is None:
            raise AssertionError("product not inside S_%s" % rep.fmt(I))
        cols.append(c)
    return Matrix.from_columns(cols, SI.dim)


def diagonal_matrix(rep, I, J):
    """Dual of nu_matrix in the dual coordinate bases."""
    return nu_matrix(rep, I, J).T


def stacked_diagonal(rep, I):
    """All diagonal blocks over the level-(n-1) T-flats in I, stacked."""
    I = tuple(sorted(I))
    SI = multiplicity_space(rep, I)
    rows = []
    for J in maximal_subflats(rep, I):
        rows.extend(diagonal_matrix(rep, I, J).rows)
    return Matrix(rows, SI.dim)


@dataclass(frozen=True)
class ContractionProjection:
    Y: tuple
    A: tuple
    B: tuple
    matrix: Matrix

    @property
    def rank(self):
        return matrix_rank(self.matrix) if self.matrix.nrows and self.matrix.ncols else 0


def _minor_subset(Y, A):
    pos = {y: i for i, y in enumerate(Y)}
    return tuple(sorted(pos[a] for a in A))


def contraction_projection(rep, Y, A):
    """Matrix of pi_n restricted to S_B(phi), landing in S_A(phi.Y).

    A is given in the indices of rep (a subset of Y)."""
    Y, A = tuple(sorted(Y)), tuple(sorted(A))
    rest = complement(rep, Y)
    if not is_independent(rep, rest):
        raise ValueError("complement of Y is dependent")
    if not set(A) <= set(Y):
        raise ValueError("A is not inside Y")
    minor = contract(rep, Y)
    Am = _minor_subset(Y, A)
    if not is_tflat(minor.derived, Am):
        raise ValueError("%s is not a T-flat of the contraction" % rep.fmt(A))
    B = b_of(rep, Y, A)
    SB = multiplicity_space(rep, B)
    SA = multiplicity_space(minor.derived, Am)
    pin = sym_power_matrix(minor.projection, SB.level)
    cols = []
    for v in SB.vectors():
        c = SA.basis.coordinates(pin.apply(v))
        if c is None:
            raise AssertionError("projection leaves the multiplicity space")
        cols.append(c)
    mat = Matrix.from_columns(cols, SA.dim)
    cp = ContractionProjection(Y, A, B, mat)
    if cp.rank != SA.dim:
        raise AssertionError("projection onto S_A of the contraction is not surjective")
    return cp


@dataclass(frozen=True)
class SequenceReport:
    a: int
    A: tuple
    B: tuple
    dim_SB: int
    dim_SA: int
    dim_SA_contracted: int
    nu_rank: int
    pi_rank: int
    image_in_kernel: bool

    @property
    def exact(self):
        return (self.image_in_kernel and self.nu_rank == self.dim_SA
                and self.pi_rank == self.dim_SA_contracted
                and self.dim_SB == self.nu_rank + self.pi_rank)


def _sequence_setup(rep, a, A):
    if not is_independent(rep, (a,)):
        raise ValueError("element %s is a loop" % rep.labels[a])
    Y = complement(rep, (a,))
    A = tuple(sorted(A))
    if a in A:
        raise ValueError("A must avoid the contracted element")
    minor = contract(rep, Y)
    if not is_tflat(minor.derived, _minor_subset(Y, A)):
        raise ValueError("%s is not a T-flat of the contraction" % rep.fmt(A))
    B = b_of(rep, Y, A)
    return Y, A, B


def check_multiplicity_sequence(rep, a, A):
    """0 -> S_A(phi) (x) V_a -> S_B(phi) -> S_A(phi.S_a) -> 0, checked by rank.

    Requires {a} to be a T-part of B.
    """
    Y, A, B = _sequence_setup(rep, a, A)
    if B == A or (a,) not in t_parts(rep, B):
        raise ValueError("{%s} is not a T-part of %s" % (rep.labels[a], rep.fmt(B)))
    cp = contraction_projection(rep, Y, A)
    SB = multiplicity_space(rep, B)
    SA = multiplicity_space(rep, A)
    col = rep.column(a)
    nu_cols = []
    for t in SA.vectors():
        c = SB.basis.coordinates(sym_multiply(t, col, rep.w_dim, SA.level, 1))
        if c is None:
            raise AssertionError("S_A * V_a is not inside S_B")
        nu_cols.append(c)
    nu = Matrix.from_columns(nu_cols, SB.dim)
    nu_rank = matrix_rank(nu) if nu_cols and SB.dim else 0
    comp = cp.matrix @ nu if nu_cols else Matrix.zeros(cp.matrix.nrows, 0)
    return SequenceReport(a, A, B, SB.dim, SA.dim, cp.matrix.nrows, nu_rank, cp.rank, comp.is_zero())


def check_contraction_isomorphism(rep, a, A):
    """When {a} is not a T-part of B the projection S_B -> S_A(phi.S_a) is
    bijective.  Returns (dim S_B, rank, dim target)."""
    Y, A, B = _sequence_setup(rep, a, A)
    if B != A and (a,) in t_parts(rep, B):
        raise ValueError("{%s} is a T-part of %s" % (rep.labels[a], rep.fmt(B)))
    cp = contraction_projection(rep, Y, A)
    return cp.matrix.ncols, cp.rank, cp.matrix.nrows


def all_multiplicity_dims(rep):
    return {I: multiplicity_dim(rep, I) for flats in tflats_by_level(rep).values() for I in flats}
