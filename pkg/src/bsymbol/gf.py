"""Exact arithmetic over small finite fields GF(q) and the linear algebra on top.

Field elements are integers in [0, q).  For an extension field GF(p^m) the
integer is the base-p encoding of the polynomial coefficients, so e.g. in
GF(4) = GF(2)[x]/(x^2+x+1) the element 3 is x+1.  All arithmetic goes
through precomputed tables, so every operation is exact and hashable.

Vectors and matrices are immutable tuples of such integers.  Projective
points and hyperplanes use the canonical representative whose first
nonzero coordinate is 1; the index of a point in :func:`enumerate_points`
is its point id everywhere else in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularMatrix, UnsupportedField

_BUILTIN_MODULI = {
    # q -> irreducible modulus, low-degree-first coefficients over GF(p)
    4: (1, 1, 1),      # x^2 + x + 1
    8: (1, 1, 0, 1),   # x^3 + x + 1
    9: (1, 0, 1),      # x^2 + 1
}

_SUPPORTED_PRIME_MAX = 64


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _poly_divmod_p(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Division with remainder of dense polynomials over GF(p), p prime."""
    num = list(num)
    d = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    quot = [0] * max(len(num) - d, 0)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i] * inv_lead % p
        quot[i - d] = c
        if c:
            for j, dj in enumerate(den):
                num[i - d + j] = (num[i - d + j] - c * dj) % p
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def _irreducible_over_prime(coeffs: Sequence[int], p: int) -> bool:
    """Trial division irreducibility check over GF(p), intended for deg <= 4."""
    deg = len(coeffs) - 1
    if deg < 1 or coeffs[-1] % p == 0:
        return False
    if deg == 1:
        return True
    for ddeg in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=ddeg):
            den = list(tail) + [1]
            _, rem = _poly_divmod_p(list(coeffs), den, p)
            if not rem:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A finite field GF(q) with q = p^m and full arithmetic tables.

    Do not construct directly; use :func:`make_field`.
    """

    q: int
    p: int
    m: int
    modulus: tuple[int, ...]
    _add: tuple[tuple[int, ...], ...] = field(compare=False, repr=False, default=())
    _mul: tuple[tuple[int, ...], ...] = field(compare=False, repr=False, default=())
    _neg: tuple[int, ...] = field(compare=False, repr=False, default=())
    _inv: tuple[int, ...] = field(compare=False, repr=False, default=())

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def elements(self) -> range:
        return range(self.q)


def _digits(value: int, p: int, m: int) -> tuple[int, ...]:
    out = []
    for _ in range(m):
        out.append(value % p)
        value //= p
    return tuple(out)


def _undigits(ds: Sequence[int], p: int) -> int:
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


def _build_tables(q: int, p: int, m: int, modulus: Sequence[int]):
    add = [[0] * q for _ in range(q)]
    mul = [[0] * q for _ in range(q)]
    for a in range(q):
        da = _digits(a, p, m)
        for b in range(q):
            db = _digits(b, p, m)
            add[a][b] = _undigits([(x + y) % p for x, y in zip(da, db)], p)
            # polynomial product reduced modulo the field modulus
            prod = [0] * (2 * m - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        prod[i + j] = (prod[i + j] + x * y) % p
            _, rem = _poly_divmod_p(prod, list(modulus) if m > 1 else [0, 1], p)
            rem += [0] * (m - len(rem))
            mul[a][b] = _undigits(rem[:m], p)
    neg = [0] * q
    inv = [0] * q
    for a in range(q):
        neg[a] = _undigits([(-x) % p for x in _digits(a, p, m)], p)
        for b in range(1, q):
            if mul[a][b] == 1:
                inv[a] = b
    return (
        tuple(tuple(r) for r in add),
        tuple(tuple(r) for r in mul),
        tuple(neg),
        tuple(inv),
    )


def _spot_check_axioms(f: FieldSpec) -> None:
    q = f.q
    for a in range(q):
        assert f.add(a, 0) == a and f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in range(q):
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in range(q):
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """Build GF(q) for q prime <= 64 or q in {4, 8, 9}.

    Raises :class:`UnsupportedField` for anything else.
    """
    if q in _BUILTIN_MODULI:
        modulus = _BUILTIN_MODULI[q]
        m = len(modulus) - 1
        p = round(q ** (1.0 / m))
        # built-in moduli are degree <= 3; re-verify by trial division anyway
        if not _irreducible_over_prime(modulus, p):
            raise UnsupportedField(f"modulus for GF({q}) is not irreducible")
    elif _is_prime(q) and q <= _SUPPORTED_PRIME_MAX:
        p, m, modulus = q, 1, (0, 1)  # the polynomial x, irreducible of degree 1
    else:
        raise UnsupportedField(f"q={q} is not a supported prime power")
    add, mul, neg, inv = _build_tables(q, p, m, modulus)
    spec = FieldSpec(q, p, m, tuple(modulus), add, mul, neg, inv)
    if q <= 9:
        _spot_check_axioms(spec)
    return spec


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

Vec = tuple[int, ...]


@dataclass(frozen=True)
class GFVector:
    """An immutable vector over a :class:`FieldSpec`."""

    field: FieldSpec
    entries: Vec

    def __post_init__(self):
        if any(not (0 <= e < self.field.q) for e in self.entries):
            raise ValueError("entry out of field range")
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __add__(self, other: "GFVector") -> "GFVector":
        self._check(other)
        f = self.field
        return GFVector(f, tuple(f.add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "GFVector") -> "GFVector":
        self._check(other)
        f = self.field
        return GFVector(f, tuple(f.sub(a, b) for a, b in zip(self.entries, other.entries)))

    def scale(self, c: int) -> "GFVector":
        f = self.field
        return GFVector(f, tuple(f.mul(c, a) for a in self.entries))

    def dot(self, other: "GFVector") -> int:
        self._check(other)
        f = self.field
        acc = 0
        for a, b in zip(self.entries, other.entries):
            acc = f.add(acc, f.mul(a, b))
        return acc

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _check(self, other: "GFVector") -> None:
        if self.field.q != other.field.q or len(self.entries) != len(other.entries):
            raise DimensionMismatch("vector shape or field mismatch")


def vec(f: FieldSpec, entries: Iterable[int]) -> GFVector:
    return GFVector(f, tuple(entries))


def dot(f: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    acc = 0
    for a, b in zip(u, v):
        acc = f.add(acc, f.mul(a, b))
    return acc


def int_to_vector(f: FieldSpec, value: int, k: int) -> Vec:
    """Base-q digits of value, most significant digit first (length k)."""
    out = [0] * k
    for i in range(k - 1, -1, -1):
        out[i] = value % f.q
        value //= f.q
    return tuple(out)


def vector_to_int(f: FieldSpec, v: Sequence[int]) -> int:
    acc = 0
    for e in v:
        acc = acc * f.q + e
    return acc


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GFMatrix:
    """An immutable row-major matrix over a :class:`FieldSpec`."""

    field: FieldSpec
    rows: tuple[Vec, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if rows:
            n = len(rows[0])
            if any(len(r) != n for r in rows):
                raise DimensionMismatch("ragged rows")
        if any(not (0 <= e < self.field.q) for r in rows for e in r):
            raise ValueError("entry out of field range")
        object.__setattr__(self, "rows", rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def col(self, j: int) -> Vec:
        return tuple(r[j] for r in self.rows)

    def cols(self) -> list[Vec]:
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self) -> "GFMatrix":
        return GFMatrix(self.field, tuple(self.cols()))

    def mul(self, other: "GFMatrix") -> "GFMatrix":
        if self.field.q != other.field.q or self.ncols != other.nrows:
            raise DimensionMismatch("matrix product shape mismatch")
        f = self.field
        ocols = other.ncols
        out = []
        for r in self.rows:
            row = [0] * ocols
            for i, a in enumerate(r):
                if a:
                    orow = other.rows[i]
                    for j in range(ocols):
                        row[j] = f.add(row[j], f.mul(a, orow[j]))
            out.append(tuple(row))
        return GFMatrix(f, tuple(out))

    def mul_vec(self, v: Sequence[int]) -> Vec:
        """Matrix times column vector."""
        f = self.field
        if len(v) != self.ncols:
            raise DimensionMismatch("vector length mismatch")
        out = []
        for r in self.rows:
            acc = 0
            for a, b in zip(r, v):
                acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return tuple(out)


def mat(f: FieldSpec, rows: Iterable[Iterable[int]]) -> GFMatrix:
    return GFMatrix(f, tuple(tuple(r) for r in rows))


def identity(f: FieldSpec, k: int) -> GFMatrix:
    return GFMatrix(f, tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)))


def from_columns(f: FieldSpec, cols: Sequence[Sequence[int]]) -> GFMatrix:
    k = len(cols[0])
    return GFMatrix(f, tuple(tuple(c[i] for c in cols) for i in range(k)))


def rref(M: GFMatrix) -> tuple[GFMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot column indices (row space unchanged)."""
    f = M.field
    rows = [list(r) for r in M.rows]
    nr, nc = len(rows), M.ncols
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = next((i for i in range(r, nr) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv_inv = f.inv(rows[r][c])
        rows[r] = [f.mul(piv_inv, x) for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                scale = rows[i][c]
                rows[i] = [f.sub(x, f.mul(scale, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return GFMatrix(f, tuple(tuple(row) for row in rows)), tuple(pivots)


def rank(M: GFMatrix) -> int:
    return len(rref(M)[1])


def subspace_dim(vectors: Sequence[GFVector | Sequence[int]], f: FieldSpec | None = None) -> int:
    """Rank of the stacked vectors; 0 for an empty list."""
    vs = []
    for v in vectors:
        if isinstance(v, GFVector):
            if f is None:
                f = v.field
            elif f.q != v.field.q:
                raise DimensionMismatch("field mismatch")
            vs.append(v.entries)
        else:
            vs.append(tuple(v))
    if not vs:
        return 0
    if len({len(v) for v in vs}) != 1:
        raise DimensionMismatch("inconsistent vector lengths")
    if f is None:
        raise DimensionMismatch("field required for raw vectors")
    return rank(GFMatrix(f, tuple(vs)))


def inverse(M: GFMatrix) -> GFMatrix:
    """Inverse of a square matrix; raises SingularMatrix if rank-deficient."""
    k = M.nrows
    if k != M.ncols:
        raise DimensionMismatch("inverse of non-square matrix")
    f = M.field
    aug = GFMatrix(f, tuple(M.rows[i] + tuple(1 if i == j else 0 for j in range(k)) for i in range(k)))
    red, pivots = rref(aug)
    if tuple(pivots[:k]) != tuple(range(k)):
        raise SingularMatrix("matrix is singular")
    return GFMatrix(f, tuple(r[k:] for r in red.rows))


# ---------------------------------------------------------------------------
# projective points and hyperplanes
# ---------------------------------------------------------------------------


def canonical_point(f: FieldSpec, v: Sequence[int]) -> Vec:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    for e in v:
        if e:
            c = f.inv(e)
            return tuple(f.mul(c, x) for x in v)
    raise ValueError("zero vector has no canonical point")


@lru_cache(maxsize=None)
def enumerate_points(f: FieldSpec, k: int) -> tuple[GFVector, ...]:
    """All (q^k-1)/(q-1) canonical point representatives, in lexicographic order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    pts = []
    for lead in range(k):
        for tail in itertools.product(range(f.q), repeat=k - 1 - lead):
            pts.append((0,) * lead + (1,) + tail)
    pts.sort()
    return tuple(GFVector(f, p) for p in pts)


@lru_cache(maxsize=None)
def enumerate_hyperplanes(f: FieldSpec, k: int) -> tuple[GFVector, ...]:
    """Canonical dual vectors h; a point P lies on hyperplane h iff h.P == 0."""
    return enumerate_points(f, k)


def point_index(f: FieldSpec, k: int) -> dict[Vec, int]:
    """Map canonical point tuple -> point id."""
    return {p.entries: i for i, p in enumerate(enumerate_points(f, k))}


def complete_to_basis(f: FieldSpec, vectors: Sequence[Sequence[int]], k: int) -> list[Vec]:
    """Extend independent vectors to a basis of GF(q)^k.

    Completion vectors are the lexicographically smallest canonical points
    that keep the list independent, so the result is deterministic.
    """
    basis = [tuple(v) for v in vectors]
    if subspace_dim(basis, f) != len(basis):
        raise DimensionMismatch("input vectors are dependent")
    for p in enumerate_points(f, k):
        if len(basis) == k:
            break
        if subspace_dim(basis + [p.entries], f) > len(basis):
            basis.append(p.entries)
    return basis


def gl_map(f: FieldSpec, src: Sequence[Sequence[int]], dst: Sequence[Sequence[int]]) -> GFMatrix:
    """An invertible k x k matrix M with M @ src[i] == dst[i] for all i.

    Both lists must be independent and of equal length; they are completed
    to bases deterministically.
    """
    if len(src) != len(dst):
        raise DimensionMismatch("src and dst length differ")
    k = len(src[0])
    S = from_columns(f, complete_to_basis(f, src, k))
    T = from_columns(f, complete_to_basis(f, dst, k))
    return T.mul(inverse(S))
