"""PG(k-1, q) machinery behind the b-symbol metric.

A code's generator columns induce an ordered multiset of window spans
(one subspace per cyclic b-window); hyperplane counts of that system
recover n - d.  This module extracts such systems, recomputes their
(n, k, s, mu) parameters by exhaustive sweeps, rewrites a generator
matrix into a faithful one without shrinking the distance, expands a
code into its associated Hamming-metric code, and produces the q = 2
line/point multiset decomposition used by the non-existence arguments.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bmetric import DEFAULT_ENUM_BUDGET, CodeMatrix, is_faithful, min_b_distance
from .errors import InvariantViolation, NotApplicable, NotFaithful
from .gf import (
    FieldSpec,
    GFMatrix,
    canonical_point,
    dot,
    enumerate_hyperplanes,
    enumerate_points,
    from_columns,
    mat,
    point_index,
    rank,
    rref,
)

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^k, stored as an RREF basis (canonical form)."""

    field: FieldSpec
    k: int
    basis: tuple[Vec, ...]

    @staticmethod
    def span(f: FieldSpec, k: int, vectors: list[Vec] | tuple[Vec, ...]) -> "Subspace":
        if not vectors:
            return Subspace(f, k, ())
        red, pivots = rref(GFMatrix(f, tuple(vectors)))
        return Subspace(f, k, red.rows[: len(pivots)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, v: Vec) -> bool:
        if not any(v):
            return True
        if not self.basis:
            return False
        return rank(GFMatrix(self.field, self.basis + (v,))) == self.dim

    def leq_hyperplane(self, h: Vec) -> bool:
        return all(dot(self.field, b, h) == 0 for b in self.basis)

    def points(self) -> list[Vec]:
        """All canonical points of the subspace."""
        f = self.field
        seen = set()
        for coeffs in itertools.product(range(f.q), repeat=self.dim):
            if not any(coeffs):
                continue
            v = [0] * self.k
            for c, b in zip(coeffs, self.basis):
                if c:
                    for i, e in enumerate(b):
                        v[i] = f.add(v[i], f.mul(c, e))
            seen.add(canonical_point(f, v))
        return sorted(seen)


@dataclass(frozen=True)
class ProjectiveSystem:
    """An ordered multiset of subspaces with recomputed (n, k, s, mu).

    s is the maximum number of elements inside one hyperplane, mu the
    maximum number of elements through one point; both are swept from
    scratch at construction, never trusted from the caller.
    """

    field: FieldSpec
    k: int
    elements: tuple[Subspace, ...]

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def h(self) -> int:
        return max((e.dim for e in self.elements), default=0)

    @property
    def faithful(self) -> bool:
        return all(e.dim == self.h for e in self.elements)

    @property
    def s(self) -> int:
        return self._sweeps()[0]

    @property
    def mu(self) -> int:
        return self._sweeps()[1]

    def _sweeps(self) -> tuple[int, int]:
        cached = self.__dict__.get("_sweep_cache")
        if cached is not None:
            return cached
        f, k = self.field, self.k
        s = 0
        for hp in enumerate_hyperplanes(f, k):
            s = max(s, sum(1 for e in self.elements if e.leq_hyperplane(hp.entries)))
        mu = 0
        if self.elements:
            counts: dict[Vec, int] = {}
            for e in self.elements:
                for p in e.points():
                    counts[p] = counts.get(p, 0) + 1
            mu = max(counts.values(), default=0)
        object.__setattr__(self, "_sweep_cache", (s, mu))
        return s, mu


def projective_system(f: FieldSpec, k: int, bases: list[list[Vec]]) -> ProjectiveSystem:
    """Build a system from raw spanning sets (each a list of vectors)."""
    return ProjectiveSystem(f, k, tuple(Subspace.span(f, k, [tuple(v) for v in b]) for b in bases))


def system_params(S: ProjectiveSystem) -> tuple[int, int, int, int]:
    """(n, k, s, mu) with s and mu recomputed by full sweeps."""
    return S.n, S.k, S.s, S.mu


def window_subspaces(C: CodeMatrix) -> list[Subspace]:
    cols = C.matrix.cols()
    doubled = cols + cols
    return [Subspace.span(C.field, C.k, doubled[i:i + C.b]) for i in range(C.n)]


def associated_system(C: CodeMatrix, check_distance: bool = True,
                      budget: int = DEFAULT_ENUM_BUDGET) -> ProjectiveSystem:
    """The ordered system of cyclic window spans of C.

    Verifies the window-intersection inequality
    dim(S_i meet S_{i+1}) >= max(dim S_i, dim S_{i+1}) - 1 and, unless
    disabled, that the hyperplane sweep s equals n - d_b(C) computed by
    codeword enumeration.
    """
    if C.k < C.b:
        raise NotApplicable("requires k >= b")
    elems = window_subspaces(C)
    n = C.n
    f = C.field
    for i in range(n):
        a, bb = elems[i], elems[(i + 1) % n]
        inter = a.dim + bb.dim - Subspace.span(f, C.k, a.basis + bb.basis).dim
        if inter < max(a.dim, bb.dim) - 1:
            raise InvariantViolation("window intersection inequality failed")
    S = ProjectiveSystem(f, C.k, tuple(elems))
    if check_distance and S.s != n - min_b_distance(C, budget):
        raise InvariantViolation("hyperplane sweep disagrees with enumerated distance")
    return S


def make_faithful(C: CodeMatrix) -> CodeMatrix:
    """A faithful code of the same length and dimension with d_b not decreased.

    Stage i fixes, one column per step, every cyclic (i+1)-window that
    fails to span an (i+1)-space: a zero column is replaced by the
    lexicographically smallest nonzero vector, otherwise column h = j+i is
    replaced by u_h + u_{h+1} at the smallest valid window index j.  Every
    window span only grows, so no hyperplane count increases.
    """
    if C.k < C.b:
        raise NotApplicable("requires k >= b")
    f, k, n, b = C.field, C.k, C.n, C.b
    cols = [list(c) for c in C.matrix.cols()]

    def wdim(i: int, size: int) -> int:
        vs = [tuple(cols[(i + t) % n]) for t in range(size)]
        return rank(GFMatrix(f, tuple(vs)))

    # stage 0 -> 1: no zero columns
    smallest_nonzero = (0,) * (k - 1) + (1,)
    for j in range(n):
        if not any(cols[j]):
            cols[j] = list(smallest_nonzero)

    for i in range(1, b):
        guard = 0
        while True:
            deficient = [j for j in range(n) if wdim(j, i + 1) == i]
            if not deficient:
                break
            # a deficient window followed by a full one exists: were every
            # (i+1)-window deficient, all columns would lie in one i-space,
            # contradicting rank k > i
            j = next((j for j in deficient if wdim((j + 1) % n, i + 1) == i + 1), None)
            if j is None:
                raise InvariantViolation("all windows deficient on a rank-k matrix")
            h = (j + i) % n
            nxt = cols[(h + 1) % n]
            cols[h] = [f.add(a, c) for a, c in zip(cols[h], nxt)]
            guard += 1
            if guard > n * (i + 1):
                raise InvariantViolation("faithful-ization failed to terminate")

    out = CodeMatrix(f, b, from_columns(f, [tuple(c) for c in cols]))
    if not is_faithful(out):
        raise InvariantViolation("output not faithful")
    return out


# -- associated Hamming code ---------------------------------------------------


def simplex_generator(f: FieldSpec, b: int) -> GFMatrix:
    """A fixed b x [b]_q generator matrix of the simplex code.

    Columns are the canonical points in lexicographic order, except for
    (q, b) = (2, 2) where the fixed matrix has rows (1,1,0), (0,1,1).
    """
    if f.q == 2 and b == 2:
        return mat(f, [[1, 1, 0], [0, 1, 1]])
    return from_columns(f, [p.entries for p in enumerate_points(f, b)])


def associated_hamming(C: CodeMatrix) -> CodeMatrix:
    """The Hamming-metric code of length [b]_q * n obtained by expanding
    every read window through a fixed simplex generator.

    Every codeword weight equals q^(b-1) times the b-weight of its
    preimage, so the new code is q^(b-1)-divisible with minimum distance
    q^(b-1) * d_b(C).
    """
    if C.k < C.b:
        raise NotApplicable("requires k >= b")
    f, b, n = C.field, C.b, C.n
    S = simplex_generator(f, b)
    cols = C.matrix.cols()
    doubled = cols + cols
    blocks = []
    for i in range(n):
        window = from_columns(f, doubled[i:i + b])  # k x b
        blocks.append(window.mul(S))                # k x [b]_q
    out_rows = []
    for r in range(C.k):
        row: list[int] = []
        for blk in blocks:
            row.extend(blk.rows[r])
        out_rows.append(tuple(row))
    return CodeMatrix(f, 1, GFMatrix(f, tuple(out_rows)))


# -- line/point multiset for b = 2 --------------------------------------------


@dataclass(frozen=True)
class PointMultiset:
    """A multiset of points of PG(k-1, q), keyed by point id."""

    field: FieldSpec
    k: int
    multiplicity: dict[int, int]

    def cardinality(self) -> int:
        return sum(self.multiplicity.values())

    def value(self, point_id: int) -> int:
        return self.multiplicity.get(point_id, 0)

    def subspace_multiplicity(self, S: Subspace) -> int:
        idx = point_index(self.field, self.k)
        return sum(self.multiplicity.get(idx[p], 0) for p in S.points())

    def hyperplane_multiplicity(self, h: Vec) -> int:
        pts = enumerate_points(self.field, self.k)
        return sum(
            m for pid, m in self.multiplicity.items()
            if dot(self.field, pts[pid].entries, h) == 0
        )


def line_multiset(C: CodeMatrix, budget: int = DEFAULT_ENUM_BUDGET):
    """The multiset sum of the n lines through consecutive column points.

    Requires b = 2 and a faithful code.  Returns (multiset, lines, points)
    where points[i] is the canonical point of column i and lines[i] the
    span of points i and i+1 (cyclic).  Verifies the hyperplane cap
    M(H) <= n(q+1) - d*q with d computed by codeword enumeration.
    """
    if C.b != 2:
        raise NotApplicable("line multiset is defined for b = 2")
    if not is_faithful(C):
        raise NotFaithful("adjacent columns must span lines")
    f, k, n = C.field, C.k, C.n
    pts = [canonical_point(f, c) for c in C.matrix.cols()]
    lines = [
        Subspace.span(f, k, (pts[i], pts[(i + 1) % n]))
        for i in range(n)
    ]
    idx = point_index(f, k)
    mult: dict[int, int] = {}
    for ln in lines:
        for p in ln.points():
            pid = idx[p]
            mult[pid] = mult.get(pid, 0) + 1
    M = PointMultiset(f, k, mult)
    d = min_b_distance(C, budget)
    cap = n * (f.q + 1) - d * f.q
    for hp in enumerate_hyperplanes(f, k):
        if M.hyperplane_multiplicity(hp.entries) > cap:
            raise InvariantViolation("hyperplane multiplicity exceeds n(q+1) - dq")
    return M, lines, pts
