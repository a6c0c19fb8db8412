import random
from fractions import Fraction

import pytest

from tresolve.field import GF
from tresolve.linalg import Matrix
from tresolve.multigraded import (
    FreeComplex, MultigradedPresentation, PresentationError, build_resolution, change_basis,
    deg_join, deg_le, deg_of_set, dd_failures, format_monomial, join_closure, parse_monomial,
    presentation_from_poly_matrix, strand, strand_matches_restriction, validate, verify_free_complex,
    verify_resolution,
)
from tresolve.oracle import taylor_complex
from tresolve.tcomplex import build_T_plus, diagonal_scalings

from conftest import FOUR, GRADED_SRC, GRADED_TGT


@pytest.fixture
def graded():
    return MultigradedPresentation(FOUR, GRADED_SRC, GRADED_TGT, ring_vars=["x", "y", "z"])


# the printed matrices of the worked resolution, entries (coefficient, exponent);
# the source prints -z at d_2[1][2], the degrees force -z^2 (see test below)
X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def mono(c, *powers):
    e = [0, 0, 0]
    for v, k in powers:
        e[v] += k
    return (Fraction(c), tuple(e))


PRINTED_D3 = [[mono(-1, (2, 2))], [mono(1, (1, 1))], [mono(-1, (0, 2))]]
PRINTED_D2 = [[mono(-1, (1, 2)), mono(-1, (1, 1), (2, 2)), None],
            [mono(1, (0, 2)), None, mono(-1, (2, 2))],
            [None, mono(2, (0, 2), (1, 1)), mono(2, (1, 2))],
            [None, mono(-1, (0, 2), (2, 1)), mono(-1, (1, 1), (2, 1))]]
PRINTED_D1 = [[mono(1, (0, 2), (2, 1)), mono(1, (1, 2), (2, 1)), mono(1, (2, 3)), mono(1, (1, 1), (2, 2))],
            [mono(1, (0, 3), (1, 1)), mono(1, (0, 1), (1, 3)), mono(2, (0, 1), (1, 1), (2, 2)),
             mono(3, (0, 1), (1, 2), (2, 1))]]


def as_sparse(rows):
    return {(i, j): e for i, row in enumerate(rows) for j, e in enumerate(row) if e is not None}


def scalars(rows):
    return Matrix([[e[0] if e else Fraction(0) for e in row] for row in rows], len(rows[0]))


def test_validate(graded):
    assert validate(graded) == []
    zero = MultigradedPresentation([[0, 0]], [(0, 0), (0, 0)], [(1, 1)])
    assert validate(zero) == []
    bad = MultigradedPresentation([[1, 0]], [(0, 0), (0, 0)], [(1, 0)])
    assert [(i, j) for i, j, _ in validate(bad)] == [(0, 0)]
    with pytest.raises(PresentationError):
        build_resolution(bad)


def test_deg_of_set(graded):
    assert deg_of_set(graded, (0, 1)) == (3, 3, 1)
    assert deg_of_set(graded, (2,)) == (1, 1, 3)
    assert deg_of_set(graded, (0, 1, 2, 3)) == (3, 3, 3)
    with pytest.raises(ValueError):
        deg_of_set(graded, ())


def test_degree_helpers():
    assert deg_le((1, 2), (1, 3)) and not deg_le((2, 0), (1, 3))
    assert deg_join((1, 0), (0, 2)) == (1, 2)
    assert join_closure([(1, 0), (0, 1)]) == [(0, 1), (1, 0), (1, 1)]


def test_example_generator_degrees(graded):
    fc = build_resolution(graded)
    assert fc.length == 3
    assert fc.degrees(2) == [(3, 3, 1), (3, 2, 3), (1, 3, 3)]
    assert fc.degrees(3) == [(3, 3, 3)]
    assert fc.betti() == {0: 2, 1: 4, 2: 3, 3: 1}


def test_example_matrices(graded):
    fc = build_resolution(graded)
    assert fc.differentials[1] == as_sparse(PRINTED_D1)
    assert fc.differentials[2] == as_sparse(PRINTED_D2)
    assert fc.differentials[3] == as_sparse(PRINTED_D3)
    mats = [fc.scalar_matrix(n) for n in (1, 2, 3)]
    assert diagonal_scalings(mats, [scalars(PRINTED_D1), scalars(PRINTED_D2), scalars(PRINTED_D3)]) is not None


def test_printed_entry_with_z_breaks_the_complex(graded):
    fc = build_resolution(graded)
    printed = dict(fc.differentials[2])
    printed[(1, 2)] = (Fraction(-1), (0, 0, 1))
    broken = FreeComplex(fc.components, {1: fc.differentials[1], 2: printed, 3: fc.differentials[3]}, 3)
    assert dd_failures(broken) == [2, 3]
    assert broken.homogeneity_failures() == [(2, 1, 2)]


def test_example_verifies(graded):
    r = verify_resolution(graded)
    assert r.passed, r.failures
    assert (r.length, r.bound, r.rank_L) == (3, 3, 0)


def test_strands(graded):
    fc = build_resolution(graded)
    s = strand(fc, (3, 3, 1))
    assert s.components[0] == [("G", "1", 0), ("G", "2", 0)]
    assert s.components[1] == [("E", "1", 0), ("E", "2", 0)]
    assert s.components[2] == [("T", ("1", "2"), 0)]
    empty = strand(fc, (0, 0, 0))
    assert all(empty.dim(n) == 0 for n in empty.indices())
    full = strand(fc, (3, 3, 3))
    Tp = build_T_plus(graded.rep)
    assert all(full.d(n) == Tp.d(n) for n in (1, 2, 3))
    for a in join_closure(GRADED_SRC + GRADED_TGT):
        assert strand_matches_restriction(graded, fc, a)


def test_independent_columns_give_two_term_complex():
    p = MultigradedPresentation([[1, 0], [0, 1]], [(1, 0), (0, 1)], [(0, 0), (0, 0)])
    fc = build_resolution(p)
    assert fc.betti() == {0: 2, 1: 2}
    assert verify_resolution(p).passed


# -- Taylor complexes ----------------------------------------------------------------------------

def monomial_ideal(degrees):
    m = len(degrees[0])
    return MultigradedPresentation([[1] * len(degrees)], degrees, [tuple([0] * m)])


def compare_with_taylor(degrees):
    fc = build_resolution(monomial_ideal(degrees))
    tc = taylor_complex(degrees)
    assert fc.betti() == {k: tc.rank(k) for k in range(len(degrees) + 1)}
    mats, targets = [], []
    for k in range(1, len(degrees) + 1):
        assert fc.degrees(k) == [d for _, d in tc.components[k]]
        assert {ij: e for ij, (c, e) in fc.differentials[k].items()} == \
            {ij: e for ij, (c, e) in tc.differentials[k].items()}
        mats.append(fc.scalar_matrix(k))
        targets.append(tc.scalar_matrix(k))
    assert diagonal_scalings(mats, targets) is not None
    return fc


def test_taylor_recovery():
    fc = compare_with_taylor([(2, 0), (1, 1), (0, 3)])
    assert [fc.rank(k) for k in range(4)] == [1, 3, 3, 1]


@pytest.mark.parametrize("seed", range(25))
def test_random_monomial_ideals(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 3)
    k = rng.randint(1, 5)
    degs = [tuple(rng.randint(0, 3) for _ in range(m)) for _ in range(k)]
    compare_with_taylor(degs)
    r = verify_resolution(monomial_ideal(degs))
    assert r.passed, r.failures
    assert r.length <= r.bound


def random_presentation(rng, field=None):
    m = rng.randint(1, 3)
    w = rng.randint(1, 3)
    n = rng.randint(1, 5)
    tgt = [tuple(rng.randint(0, 2) for _ in range(m)) for _ in range(w)]
    M = [[rng.choice([0, 0, 1, -1, 2, 3]) for _ in range(n)] for _ in range(w)]
    src = []
    for j in range(n):
        rows = [tgt[i] for i in range(w) if M[i][j]] or [tuple([0] * m)]
        base = deg_join(*rows)
        src.append(tuple(b + rng.randint(0, 2) for b in base))
    kw = {"field": field} if field else {}
    return MultigradedPresentation(M, src, tgt, **kw)


@pytest.mark.parametrize("seed", range(30))
def test_random_presentations(seed):
    rng = random.Random(1000 + seed)
    p = random_presentation(rng, GF(7) if seed % 5 == 0 else None)
    assert validate(p) == []
    r = verify_resolution(p)
    assert r.passed, r.failures
    assert r.length <= r.bound


# -- input helpers ---------------------------------------------------------------------------------

def test_parse_monomial():
    v = ["x", "y", "z"]
    assert parse_monomial("2*x*y^3", v) == (2, (1, 3, 0))
    assert parse_monomial("-z", v) == (-1, (0, 0, 1))
    assert parse_monomial("3/2", v) == (Fraction(3, 2), (0, 0, 0))
    assert parse_monomial("0", v)[0] == 0
    with pytest.raises(PresentationError):
        parse_monomial("x+y", v)
    with pytest.raises(PresentationError):
        parse_monomial("w", v)


def test_poly_reader(graded):
    rows = [["x^2*z", "y^2*z", "z^3", "y*z^2"], ["x^3*y", "x*y^3", "2*x*y*z^2", "3*x*y^2*z"]]
    p = presentation_from_poly_matrix(rows, ["x", "y", "z"], GRADED_SRC, GRADED_TGT)
    assert p.scalar_matrix == graded.scalar_matrix
    rows[0][0] = "x*z"
    with pytest.raises(PresentationError, match=r"entry \(1,1\)"):
        presentation_from_poly_matrix(rows, ["x", "y", "z"], GRADED_SRC, GRADED_TGT)


def test_format_monomial():
    assert format_monomial(Fraction(-1), (2, 0, 1), ["x", "y", "z"]) == "-x^2*z"
    assert format_monomial(Fraction(3), (0, 1, 0), ["x", "y", "z"]) == "3*y"
    assert format_monomial(Fraction(5), (0, 0, 0), ["x", "y", "z"]) == "5"


def test_column_change_hook():
    p = monomial_ideal([(1, 0), (0, 1)])
    # e2' = e2 + e1 is not homogeneous unless deg e1 <= deg e2'
    with pytest.raises(PresentationError):
        change_basis(p, [[1, 1], [0, 1]], [(1, 0), (0, 1)])
    q = change_basis(p, [[1, 1], [0, 1]], [(1, 0), (1, 1)])
    assert verify_resolution(q).passed


def test_report_depends_only_on_complex(graded):
    fc = build_resolution(graded)
    a, b = verify_free_complex(fc), verify_free_complex(fc)
    assert a == b
