"""Length bounds for codes in the Hamming and b-symbol metrics.

Everything here is plain integer arithmetic: the classical Griesmer sum,
its b-symbol analogue with the equivalent alternative form, the
Singleton-type bound, the sigma/epsilon parameterization of the Griesmer
sum, its periodicity split, the counting bound for projective systems,
and the closed forms for the exact minimum lengths n_2^2(k, d), k <= 5.

Values are exact; q^(b-1)*d is capped so intermediate sums stay far away
from any precision concern.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateCase, OutOfRange

#: cap on q^(b-1)*d inside the b-symbol Griesmer bound
ARITHMETIC_CAP = 1 << 40


def point_count(q: int, i: int) -> int:
    """Number of points of an i-space over GF(q): (q^i - 1)/(q - 1)."""
    return (q**i - 1) // (q - 1)


def _check_scale(q: int, b: int, d: int) -> None:
    if q ** (b - 1) * d > ARITHMETIC_CAP:
        raise OverflowError(f"q^(b-1)*d exceeds cap {ARITHMETIC_CAP}")


def griesmer(q: int, k: int, d: int) -> int:
    """Hamming-metric Griesmer sum g_q(k, d) = sum of k ceilings d/q^i."""
    if q < 2 or k < 1 or d < 1:
        raise ValueError("need q >= 2, k >= 1, d >= 1")
    return sum(-(-d // q**i) for i in range(k))


def griesmer_b_lower(q: int, k: int, b: int, d: int) -> int:
    """Lower bound on n for a code of dimension k and b-symbol distance d."""
    if not 1 <= b <= k:
        raise ValueError("need k >= b >= 1")
    _check_scale(q, b, d)
    return -(-griesmer(q, k, q ** (b - 1) * d) // point_count(q, b))


def griesmer_b_alt(q: int, k: int, b: int, d: int) -> int:
    """Alternative form d + ceil((g_q(k-b+1, d) - d)/[b]_q); equals griesmer_b_lower."""
    if not 1 <= b <= k:
        raise ValueError("need k >= b >= 1")
    _check_scale(q, b, d)
    return d + -(-(griesmer(q, k - b + 1, d) - d) // point_count(q, b))


def singleton_max_d(n: int, k: int, b: int) -> int:
    """Singleton-type upper bound on the b-symbol distance: n + b - k."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1, k >= 1")
    return n + b - k


@dataclass(frozen=True)
class GriesmerDecomposition:
    """d written as sigma*q^(k-1) - sum eps_i*q^(i-1) with 0 <= eps_i < q."""

    q: int
    k: int
    d: int
    sigma: int
    epsilons: tuple[int, ...]

    @property
    def n(self) -> int:
        """Length at which the Griesmer sum is met with equality."""
        return self.sigma * point_count(self.q, self.k) - sum(
            e * point_count(self.q, i) for i, e in enumerate(self.epsilons, start=1)
        )

    @property
    def n_minus_d(self) -> int:
        return self.sigma * point_count(self.q, self.k - 1) - sum(
            e * point_count(self.q, i - 1) for i, e in enumerate(self.epsilons, start=1)
        )

    def reconstruct_d(self) -> int:
        return self.sigma * self.q ** (self.k - 1) - sum(
            e * self.q ** (i - 1) for i, e in enumerate(self.epsilons, start=1)
        )


def sigma_epsilon(q: int, k: int, d: int) -> GriesmerDecomposition:
    """The unique (sigma, eps_1..eps_{k-1}) representation of d."""
    if d < 1:
        raise ValueError("need d >= 1")
    sigma = -(-d // q ** (k - 1))
    r = sigma * q ** (k - 1) - d
    eps = []
    for _ in range(k - 1):
        eps.append(r % q)
        r //= q
    dec = GriesmerDecomposition(q, k, d, sigma, tuple(eps))
    assert dec.reconstruct_d() == d
    return dec


def period(q: int, k: int, b: int) -> int:
    """The distance period q^(k-b)*[b]_q of the b-symbol Griesmer bound."""
    return q ** (k - b) * point_count(q, b)


def periodic_split(q: int, k: int, b: int, d: int) -> tuple[int, int]:
    """Split d = lambda*period + d' with lambda maximal and 1 <= d' <= period.

    Satisfies griesmer_b_lower(d) == lambda*[k]_q + griesmer_b_lower(d').
    """
    if not 1 <= b <= k:
        raise ValueError("need k >= b >= 1")
    if d < 1:
        raise ValueError("need d >= 1")
    per = period(q, k, b)
    lam = (d - 1) // per
    return lam, d - lam * per


def counting_max_n(q: int, k: int, b: int, s: int) -> int:
    """Counting upper bound floor([k]_q*s/[k-b]_q) on the size of a system."""
    if k == b:
        raise DegenerateCase("counting bound is vacuous for k == b")
    if not 1 <= b < k:
        raise ValueError("need k > b >= 1")
    return point_count(q, k) * s // point_count(q, k - b)


@dataclass(frozen=True)
class BoundReport:
    """All bound values for one (q, k, b, d), as printed by the CLI."""

    q: int
    k: int
    b: int
    d: int
    griesmer_b: int
    singleton_max_d: int
    counting_max_n: int | None

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "b": self.b,
            "d": self.d,
            "griesmer_b": self.griesmer_b,
            "singleton_max_d": self.singleton_max_d,
            "counting_max_n": self.counting_max_n,
        }


def bound_report(q: int, k: int, b: int, d: int) -> BoundReport:
    """Aggregate the Griesmer-type, Singleton-type and counting bounds.

    singleton_max_d is evaluated at the Griesmer length; the counting bound
    is evaluated at s = griesmer_b - d and omitted when k == b.
    """
    gb = griesmer_b_lower(q, k, b, d)
    assert gb == griesmer_b_alt(q, k, b, d)
    counting = counting_max_n(q, k, b, gb - d) if k > b else None
    return BoundReport(q, k, b, d, gb, singleton_max_d(gb, k, b), counting)


# -- exact minimum lengths for q = b = 2, k <= 5 ------------------------------

_N22_SPECIAL = {
    (4, 2): 4,
    (4, 3): 5,
    (4, 4): 6,
    (5, 2): 5,
    (5, 3): 6,
    (5, 4): 7,
    (5, 5): 9,
    (5, 6): 9,
    (5, 7): 10,
    (5, 8): 12,
}

#: lengths certified only by exhaustive search, not by a bound formula
N22_SEARCH_CERTIFIED = {(5, 5): 9, (5, 8): 12}


def exact_n22(k: int, d: int) -> int:
    """Exact minimum length of a binary [n, k, d] code in the pair metric.

    Covered range: 1 <= k <= 5, d >= 2.
    """
    if not 1 <= k <= 5:
        raise OutOfRange(f"k={k} outside 1..5")
    if d < 2:
        raise OutOfRange(f"d={d} below 2")
    if k <= 2:
        return d
    if (k, d) in _N22_SPECIAL:
        return _N22_SPECIAL[(k, d)]
    return griesmer_b_lower(2, k, 2, d)


def lower_bound_n22(k: int, d: int) -> int:
    """Best certified lower bound on n for a binary pair-metric [n, k, d] code.

    Combines the trivial bound n >= d, the b-symbol Griesmer bound, the
    Singleton-type bound n >= d + k - 2, and the two search-certified
    non-existence results behind :data:`N22_SEARCH_CERTIFIED`.

    Kept independent of :func:`exact_n22` so the two can cross-check.
    """
    if not 1 <= k <= 5:
        raise OutOfRange(f"k={k} outside 1..5")
    if d < 2:
        raise OutOfRange(f"d={d} below 2")
    lb = d
    if k >= 2:
        lb = max(lb, griesmer_b_lower(2, k, 2, d))
    lb = max(lb, d + k - 2)
    if (k, d) in N22_SEARCH_CERTIFIED:
        lb = max(lb, N22_SEARCH_CERTIFIED[(k, d)])
    return lb
