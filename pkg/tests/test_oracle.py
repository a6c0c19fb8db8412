import pytest

from tresolve.matroid import Representation
from tresolve.oracle import (
    OracleMatroid, appendix_lemma_failures, chain_sum_multiplicity, oracle_matroid, taylor_complex,
)

from conftest import FOUR, random_reps


def test_example_independent_sets():
    om = oracle_matroid(Representation(FOUR))
    indep = [m for m in range(16) if om.independent[m]]
    assert all(om.r(m) == bin(m).count("1") for m in indep)
    assert om.circuits() == [(0, 1), (0, 2, 3), (1, 2, 3)]
    assert om.is_connected(0b1111) and not om.is_connected(0)


def test_identity_columns():
    om = OracleMatroid([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert all(om.independent)


def test_zero_column():
    om = OracleMatroid([(0, 0), (1, 0)])
    assert not om.independent[0b01]
    assert om.circuits() == [(0,)]


def test_size_cap():
    with pytest.raises(ValueError):
        OracleMatroid([(1,)] * 17)


def test_taylor_ranks():
    assert [taylor_complex([(2, 0), (1, 1), (0, 3)]).rank(k) for k in range(4)] == [1, 3, 3, 1]
    assert [taylor_complex([(1,)]).rank(k) for k in range(2)] == [1, 1]
    t = taylor_complex([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    assert [t.rank(k) for k in range(5)] == [1, 4, 6, 4, 1]
    assert t.dd_is_zero()
    with pytest.raises(ValueError):
        taylor_complex([(-1,)])


def test_chain_sum_examples():
    rep = Representation(FOUR)
    assert chain_sum_multiplicity(rep, rep.ground).dim == 1
    assert chain_sum_multiplicity(rep, (0, 1)).dim == 1
    uni = Representation([[1, 0, 1, 1], [0, 1, 1, 2]])
    assert chain_sum_multiplicity(uni, uni.ground).dim == 2


@pytest.mark.parametrize("rep", random_reps(60, seed=41))
def test_appendix_lemmas(rep):
    assert appendix_lemma_failures(oracle_matroid(rep)) == []


def test_appendix_checker_detects_bad_rank_functions():
    fake = OracleMatroid.__new__(OracleMatroid)
    fake.n, fake.full = 3, 7
    # not submodular: pairs are "dependent" but triples are free
    fake.rank = [bin(m).count("1") if bin(m).count("1") != 2 else 1 for m in range(8)]
    fake.independent = [fake.rank[m] == bin(m).count("1") for m in range(8)]
    names = {name for name, _ in appendix_lemma_failures(fake)}
    assert "nullity_monotone" in names


def test_library_never_loads_the_oracle():
    import subprocess
    import sys
    code = ("import sys, tresolve, tresolve.cli, tresolve.io, tresolve.plotting; "
            "print('tresolve.oracle' in sys.modules)")
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True).stdout.strip()
    assert out == "False"
