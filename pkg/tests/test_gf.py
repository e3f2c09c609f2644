import random

import pytest

from bsymbol.bounds import point_count
from bsymbol.errors import DimensionMismatch, UnsupportedField
from bsymbol.gf import (
    canonical_point,
    complete_to_basis,
    enumerate_hyperplanes,
    enumerate_points,
    from_columns,
    gl_map,
    identity,
    int_to_vector,
    inverse,
    make_field,
    mat,
    rank,
    rref,
    subspace_dim,
    vec,
)

SUPPORTED_Q = [2, 3, 4, 5, 7, 8, 9]


def random_matrix(f, k, n, rng):
    return mat(f, [[rng.randrange(f.q) for _ in range(n)] for _ in range(k)])


def test_make_field_prime():
    f2 = make_field(2)
    assert (f2.q, f2.p, f2.m) == (2, 2, 1)
    f61 = make_field(61)
    assert f61.mul(60, 60) == 1


def test_make_field_gf4():
    f4 = make_field(4)
    assert f4.modulus == (1, 1, 1)
    # x * x = x + 1 under x^2 + x + 1
    assert f4.mul(2, 2) == 3
    assert f4.mul(2, 3) == 1


def test_make_field_unsupported():
    for q in (1, 6, 10, 12, 16, 25, 100):
        with pytest.raises(UnsupportedField):
            make_field(q)


def test_field_tables_consistent():
    for q in SUPPORTED_Q:
        f = make_field(q)
        for a in range(q):
            assert f.sub(a, a) == 0
            if a:
                assert f.div(a, a) == 1


def test_rref_row_swap():
    f = make_field(2)
    R, piv = rref(mat(f, [[0, 1], [1, 0]]))
    assert R.rows == ((1, 0), (0, 1))
    assert piv == (0, 1)


def test_rref_hand_example():
    f = make_field(2)
    R, piv = rref(mat(f, [[1, 1, 1], [0, 1, 1]]))
    assert R.rows == ((1, 0, 0), (0, 1, 1))
    assert piv == (0, 1)


def test_rref_zero_matrix():
    f = make_field(2)
    R, piv = rref(mat(f, [[0, 0, 0], [0, 0, 0]]))
    assert R.rows == ((0, 0, 0), (0, 0, 0))
    assert piv == ()


def test_rref_idempotent_and_row_space():
    rng = random.Random(7)
    for q in (2, 3, 4, 5, 7, 8, 9):
        f = make_field(q)
        for _ in range(20):
            M = random_matrix(f, rng.randrange(1, 5), rng.randrange(1, 7), rng)
            R, _ = rref(M)
            R2, _ = rref(R)
            assert R2.rows == R.rows
            stacked = mat(f, M.rows + R.rows)
            assert rank(stacked) == rank(M) == rank(R)


def test_subspace_dim():
    f = make_field(2)
    assert subspace_dim([vec(f, (1, 0, 0)), vec(f, (0, 1, 0))]) == 2
    assert subspace_dim([vec(f, (1, 1, 0)), vec(f, (0, 1, 1)), vec(f, (1, 0, 1))]) == 2
    assert subspace_dim([]) == 0
    with pytest.raises(DimensionMismatch):
        subspace_dim([vec(f, (1, 0)), vec(f, (1, 0, 1))])


def test_enumerate_points_counts():
    for q in (2, 3, 4):
        f = make_field(q)
        for k in range(1, 7):
            assert len(enumerate_points(f, k)) == point_count(q, k)


def test_enumerate_points_gf3_order():
    f = make_field(3)
    pts = [p.entries for p in enumerate_points(f, 2)]
    assert pts == [(0, 1), (1, 0), (1, 1), (1, 2)]


def test_enumerate_points_gf2():
    f = make_field(2)
    assert len(enumerate_points(f, 3)) == 7
    assert len(enumerate_points(f, 1)) == 1
    assert len(enumerate_hyperplanes(f, 5)) == 31
    assert len(enumerate_hyperplanes(f, 1)) == 1


def test_point_hyperplane_duality():
    for q in (2, 3, 4):
        f = make_field(q)
        for k in (2, 3, 4):
            pts = enumerate_points(f, k)
            hps = enumerate_hyperplanes(f, k)
            for p in pts:
                assert sum(1 for h in hps if h.dot(p) == 0) == point_count(q, k - 1)
            for h in hps:
                assert sum(1 for p in pts if h.dot(p) == 0) == point_count(q, k - 1)


def test_point_on_three_hyperplanes():
    f = make_field(2)
    p = vec(f, (1, 1, 1))
    assert sum(1 for h in enumerate_hyperplanes(f, 3) if h.dot(p) == 0) == 3


def test_canonical_point():
    f = make_field(3)
    assert canonical_point(f, (0, 2, 1)) == (0, 1, 2)
    assert canonical_point(f, (2, 0, 1)) == (1, 0, 2)


def test_int_to_vector_msb_first():
    f = make_field(2)
    assert int_to_vector(f, 16, 5) == (1, 0, 0, 0, 0)
    assert int_to_vector(f, 1, 5) == (0, 0, 0, 0, 1)


def test_inverse_and_gl_map():
    rng = random.Random(11)
    for q in (2, 3, 4):
        f = make_field(q)
        k = 4
        while True:
            M = random_matrix(f, k, k, rng)
            if rank(M) == k:
                break
        assert M.mul(inverse(M)).rows == identity(f, k).rows
        src = [(1, 0, 0, 0), (0, 1, 0, 0)]
        dst = [(1, 1, 0, 0), (0, 0, 1, 0)]
        A = gl_map(f, src, dst)
        for s, t in zip(src, dst):
            assert A.mul_vec(s) == t
        assert rank(A) == k


def test_complete_to_basis_deterministic():
    f = make_field(2)
    basis = complete_to_basis(f, [(1, 1, 0)], 3)
    assert basis[0] == (1, 1, 0)
    assert len(basis) == 3
    assert rank(from_columns(f, basis)) == 3
    assert basis == complete_to_basis(f, [(1, 1, 0)], 3)
