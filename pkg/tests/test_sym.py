from fractions import Fraction
from math import comb

from hypothesis import given, settings, strategies as st

from tresolve.sym import SymCoords, monomials, sym_multiply, sym_power_matrix

from conftest import qmat


def test_monomial_order_descending_lex():
    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert SymCoords(3, 2).dim == 6
    assert monomials(2, 0) == ((0, 0),)


def test_dimension_is_binomial():
    for w in range(1, 4):
        for d in range(4):
            assert SymCoords(w, d).dim == comb(w + d - 1, d)


def test_multiply_linear_forms():
    # (x + y)(x - y) = x^2 - y^2
    u = (Fraction(1), Fraction(1))
    v = (Fraction(1), Fraction(-1))
    assert sym_multiply(u, v, 2, 1, 1) == (1, 0, -1)


def test_power_matrix_degree_one_is_identity_map():
    A = qmat([[1, 2], [3, 4]])
    assert sym_power_matrix(A, 1) == A


ints = st.integers(-3, 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(ints, min_size=2, max_size=2), min_size=2, max_size=2),
       st.lists(st.lists(ints, min_size=2, max_size=2), min_size=2, max_size=2),
       st.integers(0, 3))
def test_power_is_functorial(a, b, d):
    A, B = qmat(a), qmat(b)
    assert sym_power_matrix(A @ B, d) == sym_power_matrix(A, d) @ sym_power_matrix(B, d)


@settings(max_examples=40, deadline=None)
@given(st.lists(ints, min_size=2, max_size=2), st.lists(ints, min_size=2, max_size=2),
       st.lists(st.lists(ints, min_size=2, max_size=2), min_size=2, max_size=2))
def test_power_respects_products(u, v, a):
    A = qmat(a)
    u = tuple(Fraction(x) for x in u)
    v = tuple(Fraction(x) for x in v)
    prod = sym_multiply(u, v, 2, 1, 1)
    lhs = sym_power_matrix(A, 2).apply(prod)
    rhs = sym_multiply(A.apply(u), A.apply(v), 2, 1, 1)
    assert tuple(lhs) == tuple(rhs)
