"""Exact polyhedral computations.

Rational feasibility, projections and bounding boxes all go through
Fourier-Motzkin elimination, which is exact and needs no pivoting rules.
It is exponential in the worst case but the systems handled here live in
dimension at most four or so.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, floor
from typing import Iterator, List, Optional, Sequence, Tuple

from .linalg import (
    DimensionError,
    Matrix,
    RankDeficientError,
    Vector,
    as_matrix,
    as_vector,
    column,
    det,
    dot,
    primitive_normal,
    rank,
)

Interval = Tuple[Optional[Fraction], Optional[Fraction]]
Row = Tuple[Tuple[Fraction, ...], Fraction]


class UnboundedError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """An enumeration grew past its configured size guard."""


@dataclass(frozen=True)
class HPolyhedron:
    """``{x in R^dim : A x <= d}``; an empty system is all of ``R^dim``."""

    dim: int
    A: Tuple[Tuple[Fraction, ...], ...] = ()
    d: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        A = tuple(tuple(Fraction(x) for x in row) for row in self.A)
        d = tuple(Fraction(x) for x in self.d)
        if len(A) != len(d) or any(len(r) != self.dim for r in A):
            raise DimensionError("inconsistent H-representation")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "d", d)

    @classmethod
    def from_box(cls, box: Sequence[Interval]) -> "HPolyhedron":
        m = len(box)
        A, d = [], []
        for i, (lo, hi) in enumerate(box):
            e = [0] * m
            if lo is not None:
                e[i] = -1
                A.append(tuple(e))
                d.append(-Fraction(lo))
            e = [0] * m
            if hi is not None:
                e[i] = 1
                A.append(tuple(e))
                d.append(Fraction(hi))
        return cls(m, tuple(A), tuple(d))

    def rows(self) -> List[Row]:
        return list(zip(self.A, self.d))

    def contains(self, x) -> bool:
        return all(dot(a, x) <= b for a, b in zip(self.A, self.d))

    def intersect(self, *others: "HPolyhedron") -> "HPolyhedron":
        A, d = list(self.A), list(self.d)
        for o in others:
            if o.dim != self.dim:
                raise DimensionError("dimension mismatch in intersection")
            A.extend(o.A)
            d.extend(o.d)
        return HPolyhedron(self.dim, tuple(A), tuple(d))

    def affine_preimage(self, T: Matrix, t) -> "HPolyhedron":
        """``{x : T x + t in self}``."""
        n = len(T[0])
        A = tuple(tuple(sum(a[k] * T[k][j] for k in range(self.dim)) for j in range(n)) for a in self.A)
        d = tuple(b - dot(a, t) for a, b in zip(self.A, self.d))
        return HPolyhedron(n, A, d)


# -- Fourier-Motzkin ---------------------------------------------------------

class _Infeasible(Exception):
    pass


def _canonical(rows) -> List[Row]:
    """Scale rows, drop trivial ones, keep the tightest of parallel duplicates.

    Raises ``_Infeasible`` on a row ``0 <= negative``.
    """
    best = {}
    for a, b in rows:
        piv = next((x for x in a if x), None)
        if piv is None:
            if b < 0:
                raise _Infeasible
            continue
        s = abs(piv)
        key = tuple(x / s for x in a)
        rhs = b / s
        if key not in best or rhs < best[key]:
            best[key] = rhs
    return list(best.items())


def _eliminate(rows: List[Row], k: int) -> List[Row]:
    pos, neg, out = [], [], []
    for a, b in rows:
        if a[k] > 0:
            pos.append((a, b))
        elif a[k] < 0:
            neg.append((a, b))
        else:
            out.append((a, b))
    for ap, bp in pos:
        for an, bn in neg:
            lp, ln = -an[k], ap[k]
            a = tuple(lp * x + ln * y for x, y in zip(ap, an))
            out.append((a, lp * bp + ln * bn))
    return _canonical(out)


def _eliminate_all(rows: List[Row], ks) -> List[Row]:
    rows = _canonical(rows)
    for k in ks:
        rows = _eliminate(rows, k)
    return rows


def _interval_of(rows: List[Row], i: int) -> Interval:
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for a, b in rows:
        c = a[i]
        if c > 0:
            v = b / c
            hi = v if hi is None else min(hi, v)
        elif c < 0:
            v = b / c
            lo = v if lo is None else max(lo, v)
    return lo, hi


def fm_project_feasible(P: HPolyhedron) -> bool:
    try:
        _eliminate_all(P.rows(), range(P.dim))
    except _Infeasible:
        return False
    return True


def bounding_box(P: HPolyhedron) -> Optional[List[Interval]]:
    """Exact per-coordinate ranges of ``P``; ``None`` bounds mean infinite.

    Returns ``None`` when ``P`` is empty.
    """
    try:
        base = _canonical(P.rows())
        box = []
        for i in range(P.dim):
            rows = _eliminate_all(base, [k for k in range(P.dim) if k != i])
            lo, hi = _interval_of(rows, i)
            if lo is not None and hi is not None and lo > hi:
                return None
            box.append((lo, hi))
    except _Infeasible:
        return None
    return box


def _prefix_projections(P: HPolyhedron) -> List[List[Row]]:
    """``proj[k]`` describes the projection of ``P`` onto coordinates ``0..k``."""
    proj: List[List[Row]] = [[] for _ in range(P.dim)]
    rows = _canonical(P.rows())
    for k in range(P.dim - 1, -1, -1):
        proj[k] = rows
        rows = _eliminate(rows, k)
    return proj


def _slice(rows: List[Row], prefix: Sequence, k: int) -> Interval:
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for a, b in rows:
        c = a[k]
        r = b - sum(a[j] * prefix[j] for j in range(k))
        if c > 0:
            v = r / c
            hi = v if hi is None else min(hi, v)
        elif c < 0:
            v = r / c
            lo = v if lo is None else max(lo, v)
        elif r < 0:
            return Fraction(1), Fraction(0)
    return lo, hi


def find_point(P: HPolyhedron) -> Optional[Vector]:
    """Some rational point of ``P`` (coordinates chosen near zero), or ``None``."""
    try:
        proj = _prefix_projections(P)
    except _Infeasible:
        return None
    x: List[Fraction] = []
    for k in range(P.dim):
        lo, hi = _slice(proj[k], x, k)
        if lo is not None and hi is not None and lo > hi:
            return None
        if (lo is None or lo <= 0) and (hi is None or hi >= 0):
            v = Fraction(0)
        elif lo is not None and lo > 0:
            v = lo
        else:
            v = hi
        x.append(v)
    if not P.contains(x):
        return None
    return as_vector(x)


def integer_points(P: HPolyhedron, box: Sequence[Interval], budget: Optional[int] = None) -> Iterator[Vector]:
    """All integer points of ``P`` inside ``box``, in lexicographic order.

    Each coordinate range is tightened against the projection of ``P`` onto
    the current prefix, so empty branches are cut as early as possible.
    ``budget`` caps the number of visited search nodes.
    """
    m = P.dim
    if len(box) != m:
        raise DimensionError("box dimension mismatch")
    ilo, ihi = [], []
    for lo, hi in box:
        if lo is None or hi is None:
            raise UnboundedError("integer_points needs a bounded box")
        ilo.append(ceil(lo))
        ihi.append(floor(hi))
    try:
        proj = _prefix_projections(P)
    except _Infeasible:
        return
    if m == 0:
        yield ()
        return
    visited = 0
    prefix: List[int] = []

    def rec(k: int):
        nonlocal visited
        lo, hi = _slice(proj[k], prefix, k)
        a = ilo[k] if lo is None else max(ilo[k], ceil(lo))
        b = ihi[k] if hi is None else min(ihi[k], floor(hi))
        for v in range(a, b + 1):
            visited += 1
            if budget is not None and visited > budget:
                raise BudgetExceeded(f"integer scan exceeded budget of {budget} nodes")
            prefix.append(v)
            if k == m - 1:
                yield tuple(prefix)
            else:
                yield from rec(k + 1)
            prefix.pop()

    yield from rec(0)


# -- cones --------------------------------------------------------------------

@dataclass(frozen=True)
class ConeFacets:
    """Outer description ``{x : a.x <= 0 for a in normals}`` of a full-dimensional cone."""

    dim: int
    normals: Tuple[Vector, ...]

    def contains(self, x) -> bool:
        return all(dot(a, x) <= 0 for a in self.normals)

    def as_polyhedron(self) -> HPolyhedron:
        return HPolyhedron(self.dim, self.normals, (0,) * len(self.normals))


def cone_facets(W: Matrix) -> ConeFacets:
    """Facet normals of ``cone(W)`` by testing every hyperplane spanned by ``m-1`` columns."""
    W = as_matrix(W)
    m, n = len(W), len(W[0])
    if rank(W) < m:
        raise RankDeficientError("cone_facets needs a full-dimensional cone")
    cols = [column(W, j) for j in range(n)]
    found = []
    for idx in combinations(range(n), m - 1):
        S = tuple(tuple(cols[j][i] for j in idx) for i in range(m))
        a = primitive_normal(S, m)
        if a is None:
            continue
        vals = [dot(a, w) for w in cols]
        if all(v <= 0 for v in vals):
            found.append(a)
        elif all(v >= 0 for v in vals):
            found.append(tuple(-x for x in a))
    return ConeFacets(m, tuple(sorted(set(found))))


@dataclass(frozen=True)
class ColumnBasis:
    indices: Tuple[int, ...]
    W_B: Matrix
    det_abs: int


def enumerate_bases(W: Matrix) -> List[ColumnBasis]:
    """All nonsingular ``m``-column selections of ``W`` in lexicographic order (0-based)."""
    W = as_matrix(W)
    m, n = len(W), len(W[0])
    if rank(W) < m:
        raise RankDeficientError("enumerate_bases needs rank(W) == m")
    out = []
    for idx in combinations(range(n), m):
        WB = tuple(tuple(row[j] for j in idx) for row in W)
        d = det(WB)
        if d:
            out.append(ColumnBasis(idx, WB, abs(d)))
    return out
