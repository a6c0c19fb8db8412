import random
from fractions import Fraction

import pytest

from tresolve.field import QQ
from tresolve.linalg import Matrix
from tresolve.matroid import Representation


FOUR = [[1, 1, 1, 1], [1, 1, 2, 3]]

# the augmented complex of FOUR as printed in the source, d_3, d_2, d_1
FOUR_D3 = [[-1], [1], [-1]]
FOUR_D2 = [[-1, -1, 0], [1, 0, -1], [0, 2, 2], [0, -1, -1]]

GRADED_SRC = [(3, 1, 1), (1, 3, 1), (1, 1, 3), (1, 2, 2)]
GRADED_TGT = [(1, 1, 0), (0, 0, 1)]


def qmat(rows):
    return Matrix([[Fraction(x) for x in r] for r in rows], len(rows[0]) if rows else 0)


def random_matrix(rng, w, n, lo=-3, hi=3):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(w)]


def random_reps(count, seed=0, max_size=6, max_w=3, field=QQ):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        w = rng.randint(1, max_w)
        n = rng.randint(1, max_size)
        # bias towards dependent configurations by sometimes repeating columns
        M = random_matrix(rng, w, n)
        if n > 1 and rng.random() < 0.3:
            j, k = rng.sample(range(n), 2)
            f = rng.choice([-2, -1, 1, 2])
            for row in M:
                row[k] = f * row[j]
        out.append(Representation(M, field=field))
    return out


@pytest.fixture
def four():
    return Representation(FOUR)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
