import random

import pytest

from bsymbol.bmetric import CodeMatrix
from bsymbol.gf import make_field, mat, rank


@pytest.fixture
def f2():
    return make_field(2)


@pytest.fixture
def f3():
    return make_field(3)


def code(q, rows, b):
    f = make_field(q)
    return CodeMatrix(f, b, mat(f, rows))


def random_full_rank_code(q, k, n, b, rng: random.Random) -> CodeMatrix:
    f = make_field(q)
    while True:
        M = mat(f, [[rng.randrange(q) for _ in range(n)] for _ in range(k)])
        if rank(M) == k:
            return CodeMatrix(f, b, M)
