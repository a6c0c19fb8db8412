import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from tresolve.field import GF
from tresolve.linalg import Matrix, rank
from tresolve.matroid import (
    Representation, complement, contract, is_independent, maximal_subflats, restrict, tflats_by_level,
)
from tresolve.multiplicity import multiplicity_space
from tresolve.tcomplex import (
    build_T, build_T_plus, check_direct_sum, diagonal_scalings, diagonally_equivalent, direct_sum_split,
    homology, phi_IJ, restrict_complex, same_complex, shuffle_sign, t_space, top_form_ratio, verify_acyclic,
)

from conftest import FOUR, FOUR_D2, FOUR_D3, qmat, random_reps


# -- building blocks -------------------------------------------------------------------

def test_shuffle_sign():
    assert shuffle_sign((0,), (1, 2)) == 1
    assert shuffle_sign((1,), (0, 2)) == -1
    assert shuffle_sign((2, 3), (0, 1)) == 1
    assert shuffle_sign((), ()) == 1


def test_top_form_ratio():
    b = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    v = [(Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))]
    assert top_form_ratio(v, b) == -1
    assert top_form_ratio([], []) == 1


def test_t_space_of_example(four):
    T = t_space(four, (0, 1))
    assert T.dim == 1 and T.v_dual_wedge == (0,)
    assert t_space(four, (2,)).level == -1
    assert t_space(four, (2,)).dim == 1


def test_disconnected_t_space_vanishes():
    rep = Representation([[1, 1, 0, 0], [0, 0, 1, 1]])
    assert t_space(rep, rep.ground).dim == 0


def test_phi_top_to_pair(four):
    # basis vector of T_S goes to minus the basis vector of T_{12}
    assert phi_IJ(four, four.ground, (0, 1)).rows == ((-1,),)


def test_phi0_coefficients(four):
    I = four.subset(["1", "3", "4"])
    got = [phi_IJ(four, I, (a,))[0, 0] for a in I]
    assert got == [1, -2, 1]
    got = [phi_IJ(four, (0, 1), (a,))[0, 0] for a in (0, 1)]
    assert got == [1, -1]


def test_phi_zero_when_complement_dependent():
    # a loop next to a circuit: the part {loop} is dependent
    rep = Representation([[1, 1, 0], [0, 0, 0]])
    I = rep.ground
    for J in maximal_subflats(rep, I):
        assert phi_IJ(rep, I, J).is_zero()


def test_phi_rejects_bad_pairs(four):
    with pytest.raises(ValueError):
        phi_IJ(four, (0, 1), (2,))
    with pytest.raises(ValueError):
        phi_IJ(four, (0, 2), (0,))


# -- the worked example -----------------------------------------------------------------

def test_example_augmented_complex(four):
    Tp = build_T_plus(four)
    assert [Tp.dim(n) for n in (3, 2, 1, 0)] == [1, 3, 4, 2]
    assert Tp.d(3) == qmat(FOUR_D3)
    assert Tp.d(2) == qmat(FOUR_D2)
    assert Tp.d(1) == qmat(FOUR)
    assert Tp.dd_failures() == []
    h = homology(Tp)
    assert all(v == 0 for v in h.homology.values())
    assert [h.rank_out[n] for n in (3, 2, 1)] == [1, 2, 2]


def test_example_equivalence_with_scaled_bases(four):
    Tp = build_T_plus(four)
    mats = [Tp.d(1), Tp.d(2), Tp.d(3)]
    # rescale basis vectors arbitrarily: still equivalent
    D = [[2, 0, 0], [0, -1, 0], [0, 0, 3]]
    scaled = [mats[0], mats[1] @ qmat(D), qmat([[Fraction(1, 2), 0, 0], [0, -1, 0], [0, 0, Fraction(1, 3)]]) @ mats[2]]
    assert diagonal_scalings(mats, scaled) is not None
    bad = qmat([[-1, -1, 0], [1, 0, -1], [0, 2, 2], [0, -1, 1]])
    assert not diagonally_equivalent(mats[1], bad)


def test_example_restriction(four):
    Y = four.subset(["1", "3", "4"])
    c = restrict_complex(four, Y)
    assert {n: c.dim(n) for n in c.indices()} == {0: 1, 1: 0}
    assert same_complex(c, build_T(restrict(four, Y).derived))
    assert same_complex(restrict_complex(four, four.ground), build_T(four))
    assert all(c.dim(n) == 0 for c in [restrict_complex(four, (0, 2))] for n in c.indices())


def test_example_single_summand(four):
    parts = direct_sum_split(four)
    assert len(parts) == 1 and same_complex(parts[0], build_T(four))


# -- degenerate and classical cases --------------------------------------------------------

def test_independent_columns():
    rep = Representation([[1, 0], [0, 1], [1, 1]])
    T = build_T(rep)
    assert all(T.dim(n) == 0 for n in T.indices())
    Tp = build_T_plus(rep)
    assert Tp.dims() == {0: 3, 1: 2}
    assert verify_acyclic(rep).passed


def test_all_loops():
    rep = Representation([[0, 0, 0]])
    T = build_T(rep)
    assert T.dim(0) == 3
    report = verify_acyclic(rep)
    assert report.passed
    # each phi_0 block is the identity; the differential carries the sign (-1)^{|J|} = -1
    assert all(phi_IJ(rep, (a,), (a,)).rows == ((1,),) for a in rep.ground)
    assert build_T_plus(rep).d(2) == -Matrix.identity(3, Fraction(1))


def _generic(r, n, seed):
    rng = random.Random(seed)
    while True:
        M = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(r)]
        rep = Representation(M)
        from itertools import combinations
        if all(rank(Matrix([[row[j] for j in cols] for row in M])) == r for cols in combinations(range(n), r)):
            return rep


def test_uniform_rank2_on_5():
    rep = _generic(2, 5, 7)
    Tp = build_T_plus(rep)
    assert [Tp.dim(n) for n in range(4, -1, -1)] == [3, 10, 10, 5, 2]
    assert verify_acyclic(rep).passed


@pytest.mark.parametrize("r,n", [(1, 4), (2, 4), (2, 6), (3, 5)])
def test_uniform_dimension_formula(r, n):
    rep = _generic(r, n, r + n)
    T = build_T(rep)
    for k in T.indices():
        assert T.dim(k) == comb(n, k + r + 1) * comb(k + r - 1, k)


def test_two_parallel_pairs_split():
    rep = Representation([[1, 2, 0, 0], [0, 0, 1, -1]])
    parts = direct_sum_split(rep)
    assert len(parts) == 2
    assert [p.dims() for p in parts] == [{0: 1}, {0: 1}]
    assert check_direct_sum(rep)


def test_finite_field_example():
    rep = Representation(FOUR, field=GF(5))
    assert verify_acyclic(rep).passed
    rep2 = Representation(FOUR, field=GF(2))
    assert verify_acyclic(rep2).passed


# -- properties on random instances ---------------------------------------------------------

small = st.integers(-3, 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3).flatmap(lambda w: st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=w, max_size=w))))
def test_complex_and_acyclic(M):
    rep = Representation(M)
    report = verify_acyclic(rep)
    assert report.passed, report.failures


@pytest.mark.parametrize("rep", random_reps(40, seed=31, max_size=6))
def test_restriction_is_subcomplex(rep):
    for m in range(1 << rep.size):
        Y = tuple(i for i in range(rep.size) if m >> i & 1)
        assert same_complex(restrict_complex(rep, Y), build_T(restrict(rep, Y).derived))


@pytest.mark.parametrize("rep", random_reps(40, seed=32))
def test_direct_sum(rep):
    assert check_direct_sum(rep)


@pytest.mark.parametrize("rep", random_reps(40, seed=33))
def test_blocks_are_injective(rep):
    for n, flats in tflats_by_level(rep).items():
        if n < 1:
            continue
        for I in flats:
            d = multiplicity_space(rep, I).dim
            if not d:
                continue
            cols = [phi_IJ(rep, I, J) for J in maximal_subflats(rep, I)]
            stacked = Matrix([row for blk in cols for row in blk.rows], d)
            assert rank(stacked) == d


@pytest.mark.parametrize("rep", random_reps(30, seed=34))
def test_dims_invariant_under_change_of_coordinates(rep):
    rng = random.Random(rep.size * 7 + rep.w_dim)
    w = rep.w_dim
    while True:
        g = [[rng.randint(-2, 2) for _ in range(w)] for _ in range(w)]
        if rank(qmat(g)) == w:
            break
    scales = [rng.choice([-3, -2, -1, 1, 2, Fraction(1, 2)]) for _ in range(rep.size)]
    M = qmat(g) @ rep.phi
    M = Matrix([[M[i, j] * scales[j] for j in range(rep.size)] for i in range(w)], rep.size)
    rep2 = Representation(M)
    assert build_T(rep).dims() == build_T(rep2).dims()
    assert build_T_plus(rep).dims() == build_T_plus(rep2).dims()


@pytest.mark.parametrize("rep", random_reps(40, seed=35))
def test_contraction_keeps_homology(rep):
    hT = homology(build_T(rep)).homology
    for m in range(1 << rep.size):
        Y = tuple(i for i in range(rep.size) if m >> i & 1)
        if not Y or not is_independent(rep, complement(rep, Y)):
            continue
        h2 = homology(build_T(contract(rep, Y).derived)).homology
        keys = set(hT) | set(h2)
        assert all(hT.get(k, 0) == h2.get(k, 0) for k in keys)
