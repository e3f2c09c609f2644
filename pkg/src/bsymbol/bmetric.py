"""The b-symbol read vector, weight, distance and weight enumerator.

For a length-n word c the read vector is the cyclic sequence of n
overlapping b-tuples (c_i, ..., c_{i+b-1}); the b-weight counts the
nonzero tuples.  b = 1 recovers the Hamming weight.

Codeword enumeration uses Gray-code order over GF(2) messages (one row
XOR per step, codewords packed into machine integers) and plain odometer
order otherwise; results are identical either way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BadWindow, BudgetExceeded, DimensionMismatch
from .gf import FieldSpec, GFMatrix, GFVector, rank

#: default cap on the number of codewords an enumeration may visit
DEFAULT_ENUM_BUDGET = 1 << 28


@dataclass(frozen=True)
class CodeMatrix:
    """A full-rank k x n generator matrix with its read-window size b."""

    field: FieldSpec
    b: int
    matrix: GFMatrix

    def __post_init__(self):
        k, n = self.matrix.nrows, self.matrix.ncols
        if not 1 <= self.b <= n:
            raise BadWindow(f"b={self.b} outside 1..{n}")
        if rank(self.matrix) != k:
            raise DimensionMismatch(f"generator matrix has rank < k={k}")

    @property
    def k(self) -> int:
        return self.matrix.nrows

    @property
    def n(self) -> int:
        return self.matrix.ncols

    @property
    def q(self) -> int:
        return self.field.q

    def codeword(self, message: tuple[int, ...]) -> tuple[int, ...]:
        f = self.field
        out = [0] * self.n
        for m_i, row in zip(message, self.matrix.rows):
            if m_i:
                for j, g in enumerate(row):
                    out[j] = f.add(out[j], f.mul(m_i, g))
        return tuple(out)


@dataclass(frozen=True)
class BWeightEnumerator:
    """Distribution of wt_b over all q^k codewords."""

    n: int
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def min_nonzero_weight(self) -> int:
        return min(w for w in self.counts if w > 0)


def read_vector(c: GFVector | tuple[int, ...], b: int) -> tuple[tuple[int, ...], ...]:
    """The n cyclic b-tuples (c_i, ..., c_{i+b-1}), indices mod n."""
    entries = c.entries if isinstance(c, GFVector) else tuple(c)
    n = len(entries)
    if not 1 <= b <= n:
        raise BadWindow(f"b={b} outside 1..{n}")
    doubled = entries + entries
    return tuple(doubled[i:i + b] for i in range(n))


def b_weight(c: GFVector | tuple[int, ...], b: int) -> int:
    """Number of nonzero tuples in the read vector; Hamming weight for b=1."""
    entries = c.entries if isinstance(c, GFVector) else tuple(c)
    n = len(entries)
    if not 1 <= b <= n:
        raise BadWindow(f"b={b} outside 1..{n}")
    doubled = entries + entries
    return sum(1 for i in range(n) if any(doubled[i:i + b]))


def b_distance(c: GFVector, c2: GFVector, b: int) -> int:
    """wt_b of the difference c - c2."""
    return b_weight(c - c2, b)


# -- packed GF(2) fast path --------------------------------------------------


def pack_word(entries: tuple[int, ...]) -> int:
    """GF(2) word as an int, coordinate i on bit i."""
    w = 0
    for i, e in enumerate(entries):
        if e:
            w |= 1 << i
    return w


def b_weight_packed(word: int, n: int, b: int) -> int:
    """wt_b of a packed GF(2) word of length n."""
    ext = word | (word << n)
    acc = ext
    for j in range(1, b):
        acc |= ext >> j
    return (acc & ((1 << n) - 1)).bit_count()


def _gray_codewords_gf2(C: CodeMatrix):
    """Yield packed nonzero codewords in Gray-code message order."""
    rows = [pack_word(r) for r in C.matrix.rows]
    word = 0
    for m in range(1, 1 << C.k):
        word ^= rows[(m & -m).bit_length() - 1]
        yield word


def _projective_messages(q: int, k: int):
    """One message per scalar class: first nonzero coordinate equals 1."""
    for lead in range(k):
        for tail in itertools.product(range(q), repeat=k - 1 - lead):
            yield (0,) * lead + (1,) + tail


def _check_budget(C: CodeMatrix, budget: int) -> None:
    if C.q ** C.k > budget:
        raise BudgetExceeded(f"q^k = {C.q ** C.k} exceeds budget {budget}")


def min_b_distance(C: CodeMatrix, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Minimum wt_b over all nonzero codewords.

    Skips nonzero scalar multiples (the zero-window pattern is invariant
    under scaling), so only (q^k-1)/(q-1) codewords are visited.
    """
    _check_budget(C, budget)
    n, b = C.n, C.b
    if C.q == 2:
        return min(b_weight_packed(w, n, b) for w in _gray_codewords_gf2(C))
    return min(b_weight(C.codeword(m), b) for m in _projective_messages(C.q, C.k))


def b_weight_enumerator(C: CodeMatrix, budget: int = DEFAULT_ENUM_BUDGET) -> BWeightEnumerator:
    """Full distribution of wt_b over all q^k codewords (no scalar skipping)."""
    _check_budget(C, budget)
    n, b = C.n, C.b
    counts: dict[int, int] = {0: 1}
    if C.q == 2:
        for w in _gray_codewords_gf2(C):
            wt = b_weight_packed(w, n, b)
            counts[wt] = counts.get(wt, 0) + 1
    else:
        for m in itertools.product(range(C.q), repeat=C.k):
            if not any(m):
                continue
            wt = b_weight(C.codeword(m), b)
            counts[wt] = counts.get(wt, 0) + 1
    return BWeightEnumerator(n, counts)


def hamming_weight_enumerator(C: CodeMatrix, budget: int = DEFAULT_ENUM_BUDGET) -> BWeightEnumerator:
    """Weight distribution in the plain Hamming metric (b = 1)."""
    return b_weight_enumerator(CodeMatrix(C.field, 1, C.matrix), budget)


def is_faithful(C: CodeMatrix) -> bool:
    """True iff every b cyclically-consecutive generator columns span a b-space."""
    cols = C.matrix.cols()
    n, b = C.n, C.b
    doubled = cols + cols
    f = C.field
    for i in range(n):
        window = GFMatrix(f, tuple(doubled[i:i + b]))
        if rank(window) != b:
            return False
    return True
