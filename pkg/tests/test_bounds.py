import pytest

from bsymbol.bounds import (
    bound_report,
    counting_max_n,
    exact_n22,
    griesmer,
    griesmer_b_alt,
    griesmer_b_lower,
    lower_bound_n22,
    period,
    periodic_split,
    point_count,
    sigma_epsilon,
    singleton_max_d,
)
from bsymbol.errors import DegenerateCase, OutOfRange


def test_point_count():
    assert point_count(2, 5) == 31
    assert point_count(3, 2) == 4
    assert point_count(2, 0) == 0


def test_griesmer_values():
    assert griesmer(2, 3, 2) == 4
    assert griesmer(2, 4, 2) == 5
    assert griesmer(2, 1, 17) == 17
    assert griesmer(2, 5, 48) == 93
    assert griesmer(3, 2, 5) == 7


def test_griesmer_b_lower():
    assert griesmer_b_lower(2, 5, 2, 24) == 31
    assert griesmer_b_lower(2, 3, 2, 6) == 7
    assert griesmer_b_lower(2, 5, 2, 9) == 13
    assert griesmer_b_lower(2, 4, 1, 3) == griesmer(2, 4, 3)


def test_griesmer_b_alt():
    assert griesmer_b_alt(2, 5, 2, 24) == 31
    assert griesmer_b_alt(2, 3, 2, 6) == 7
    for d in range(1, 30):
        assert griesmer_b_alt(3, 4, 1, d) == griesmer(3, 4, d)


def test_alt_identity_grid():
    for q in (2, 3, 4, 5):
        for k in range(1, 9):
            for b in range(1, k + 1):
                for d in range(1, 201):
                    assert griesmer_b_lower(q, k, b, d) == griesmer_b_alt(q, k, b, d)


def test_singleton():
    assert singleton_max_d(5, 4, 2) == 3
    assert singleton_max_d(8, 5, 2) == 5
    assert singleton_max_d(6, 6, 3) == 3


def test_sigma_epsilon():
    dec = sigma_epsilon(2, 3, 3)
    assert (dec.sigma, dec.epsilons) == (1, (1, 0))
    assert dec.n == 6
    dec = sigma_epsilon(2, 5, 16)
    assert (dec.sigma, dec.epsilons) == (1, (0, 0, 0, 0))
    assert dec.n == point_count(2, 5)
    dec = sigma_epsilon(3, 2, 5)
    assert (dec.sigma, dec.epsilons) == (2, (1,))
    assert dec.n == 7


def test_sigma_epsilon_matches_griesmer():
    for q in (2, 3, 4):
        for k in range(1, 7):
            for d in range(1, 120):
                dec = sigma_epsilon(q, k, d)
                assert dec.reconstruct_d() == d
                assert all(0 <= e < q for e in dec.epsilons)
                assert dec.n == griesmer(q, k, d)
                assert dec.n_minus_d == dec.n - d


def test_periodic_split():
    assert periodic_split(2, 5, 2, 31) == (1, 7)
    assert griesmer_b_lower(2, 5, 2, 31) == point_count(2, 5) + griesmer_b_lower(2, 5, 2, 7) == 41
    assert periodic_split(2, 5, 2, 24) == (0, 24)
    assert periodic_split(2, 3, 2, 13) == (2, 1)
    assert griesmer_b_lower(2, 3, 2, 13) == 16


def test_periodicity_grid():
    for q in (2, 3, 4, 5):
        for k in range(1, 9):
            for b in range(1, k + 1):
                per = period(q, k, b)
                for d in range(1, 201):
                    assert griesmer_b_lower(q, k, b, d + per) == griesmer_b_lower(q, k, b, d) + point_count(q, k)
                    lam, dprime = periodic_split(q, k, b, d)
                    assert 1 <= dprime <= per and d == lam * per + dprime
                    assert griesmer_b_lower(q, k, b, d) == lam * point_count(q, k) + griesmer_b_lower(q, k, b, dprime)


def test_counting_bound():
    assert counting_max_n(2, 5, 2, 7) == 31
    assert counting_max_n(2, 5, 2, 3) == 13
    assert counting_max_n(2, 3, 2, 0) == 0
    with pytest.raises(DegenerateCase):
        counting_max_n(2, 4, 4, 3)


def test_griesmer_dominates_counting():
    # the length bound implied by the counting bound never beats Griesmer
    for q in (2, 3):
        for k in range(2, 7):
            for b in range(1, k):
                for d in range(1, 100):
                    n = griesmer_b_lower(q, k, b, d)
                    assert n <= counting_max_n(q, k, b, n - d)


def test_exact_n22_values():
    assert exact_n22(4, 9) == 12
    assert exact_n22(5, 5) == 9
    assert exact_n22(3, 2) == 3
    assert exact_n22(1, 7) == 7
    assert exact_n22(2, 7) == 7
    assert exact_n22(4, 2) == 4
    assert exact_n22(4, 3) == 5
    assert exact_n22(4, 4) == 6
    for d, n in [(2, 5), (3, 6), (4, 7), (5, 9), (6, 9), (7, 10), (8, 12)]:
        assert exact_n22(5, d) == n
    # closed-form region
    assert exact_n22(5, 9) == 13
    assert exact_n22(5, 24) == 31
    assert exact_n22(5, 31) == 41
    assert exact_n22(5, 32) == 42


def test_exact_n22_table_k4():
    table = {2: 4, 3: 5, 4: 6, 5: 7, 6: 8, 7: 9, 8: 10, 9: 12, 10: 13, 11: 14, 12: 15}
    for d, n in table.items():
        assert exact_n22(4, d) == n


def test_exact_n22_k3_closed_form():
    for t in range(0, 6):
        for i in range(1, 7):
            d = 6 * t + i
            if d < 2:
                continue
            assert exact_n22(3, d) == 7 * t + i + 1


def test_exact_n22_range_errors():
    with pytest.raises(OutOfRange):
        exact_n22(6, 4)
    with pytest.raises(OutOfRange):
        exact_n22(3, 1)


def test_lower_bound_certifies_exact():
    for k in range(1, 6):
        for d in range(2, 41):
            assert lower_bound_n22(k, d) == exact_n22(k, d)


def test_exact_never_below_griesmer():
    for k in range(2, 6):
        for d in range(2, 60):
            assert exact_n22(k, d) >= griesmer_b_lower(2, k, 2, d)


def test_bound_report():
    rep = bound_report(2, 5, 2, 24)
    assert rep.griesmer_b == 31
    assert rep.singleton_max_d == 31 + 2 - 5
    assert rep.counting_max_n == 31
    rep = bound_report(2, 3, 3, 4)
    assert rep.counting_max_n is None
