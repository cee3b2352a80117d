"""Diagonal Frobenius numbers of pointed cones.

``t*`` is the least natural ``t`` such that every lattice point ``W x``
with real weights ``x >= t`` is already a nonnegative integer combination of
the columns.

The exact computation is finite for a reason worth spelling out.  If ``z``
is a bad point at level ``t`` with a representation ``z = W x`` where some
``x_j >= t + 1``, then ``z - w_j`` is again a level-``t`` lattice point and
again bad (otherwise ``z`` would be good).  Pointedness makes this descent
terminate, and it ends at a bad point with ``t <= x < t + 1``, which has
infinity norm at most ``(t + 1)`` times the largest absolute row sum of
``W``.  So scanning that box decides level ``t`` outright.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm
from typing import Optional, Set, Tuple

from .lattice import Lattice
from .linalg import Matrix, Vector, as_matrix, columns, det, dot, hnf, identity, mat_mul, norm_inf, rank, transpose
from .linalg import RankDeficientError
from .polyhedra import ConeFacets, HPolyhedron, cone_facets, find_point, integer_points


class NotPointedError(ValueError):
    pass


class NotApplicableError(ValueError):
    pass


def diagonal_frobenius_bound(m: int, delta: int) -> int:
    """``m (2 m delta + 1)^m``."""
    if m < 1 or delta < 1:
        raise ValueError("need m >= 1 and delta >= 1")
    return m * (2 * m * delta + 1) ** m


def pointed_functional(W: Matrix) -> Tuple[int, ...]:
    """Integer ``y`` with ``y . w >= 1`` for every column ``w``; raises if the cone is not pointed."""
    W = as_matrix(W)
    cols = columns(W)
    P = HPolyhedron(len(W), tuple(tuple(-x for x in w) for w in cols), (-1,) * len(cols))
    y = find_point(P)
    if y is None:
        raise NotPointedError("cone(W) contains a line")
    L = 1
    for v in y:
        if isinstance(v, Fraction):
            L = lcm(L, v.denominator)
    return tuple(int(v * L) for v in y)


class IntconeOracle:
    """Membership in ``intcone(W)`` for a pointed cone.

    Members are generated in increasing order of ``y . z``; since every
    generator raises that value by at least one, all members up to a level
    are known once the heap front passes it.
    """

    def __init__(self, W: Matrix, y: Tuple[int, ...]):
        self.cols = [w for w in columns(W) if any(w)]
        self.y = y
        zero = (0,) * len(W)
        self._members: Set[Vector] = {zero}
        self._heap = [(0, zero)]
        self._level = -1

    def _extend(self, level: int) -> None:
        heap = self._heap
        while heap and heap[0][0] <= level:
            key, v = heapq.heappop(heap)
            for w in self.cols:
                u = tuple(a + b for a, b in zip(v, w))
                if u not in self._members:
                    self._members.add(u)
                    heapq.heappush(heap, (dot(self.y, u), u))
        self._level = max(self._level, level)

    def __contains__(self, z) -> bool:
        z = tuple(z)
        key = dot(self.y, z)
        if key < 0:
            return False
        if key > self._level:
            self._extend(key)
        return z in self._members


@dataclass
class FrobeniusInstance:
    W: Matrix
    y: Tuple[int, ...] = field(init=False)
    lattice: Lattice = field(init=False)
    facets: ConeFacets = field(init=False)

    def __post_init__(self):
        self.W = as_matrix(self.W)
        if rank(self.W) < len(self.W):
            raise RankDeficientError("W must have full row rank")
        self.y = pointed_functional(self.W)
        self.lattice = Lattice(hnf(self.W).square)
        self.facets = cone_facets(self.W)
        self.intcone = IntconeOracle(self.W, self.y)

    @property
    def m(self) -> int:
        return len(self.W)

    @property
    def n(self) -> int:
        return len(self.W[0])

    def certified_radius(self, t: int) -> int:
        return (t + 1) * max(sum(abs(x) for x in row) for row in self.W)

    def level_region(self, t: int, radius: int) -> HPolyhedron:
        """``(t W 1 + cone(W)) ∩ [-radius, radius]^m``."""
        s = tuple(t * sum(row) for row in self.W)
        A = [a for a in self.facets.normals]
        d = [dot(a, s) for a in self.facets.normals]
        for i in range(self.m):
            e = tuple(int(i == j) for j in range(self.m))
            A += [e, tuple(-x for x in e)]
            d += [radius, radius]
        return HPolyhedron(self.m, tuple(A), tuple(d))

    def violations(self, t: int, radius: int):
        """Lattice points of level ``t`` within ``radius`` that are not integer combinations."""
        box = [(-radius, radius)] * self.m
        for z in integer_points(self.level_region(t, radius), box):
            if self.lattice.contains(z) and z not in self.intcone:
                yield z


def exact_diagonal_frobenius(W: Matrix, t_max: Optional[int] = None, z_box: int = 200) -> Optional[int]:
    """Exact ``t*``, or ``None`` when it cannot be certified inside ``|z| <= z_box``.

    Each level ``t`` is decided on the box of radius ``(t + 1) * max row
    sum``; if that exceeds ``z_box`` before a clean level is found the
    answer is unresolved.
    """
    inst = W if isinstance(W, FrobeniusInstance) else FrobeniusInstance(W)
    if t_max is None:
        t_max = diagonal_frobenius_bound(inst.m, max(norm_inf(inst.W), 1))
    for t in range(t_max + 1):
        R = inst.certified_radius(t)
        if R > z_box:
            return None
        if next(inst.violations(t, R), None) is None:
            return t
    return None


def aliev_henk_bound(W: Matrix, precision_bits: int = 21) -> Fraction:
    """Rational upper envelope of ``(n - m) sqrt(n) sqrt(det(W W^T)) / 2``.

    Only defined when the columns generate all of ``Z^m``.  The square root
    is rounded up with absolute error below ``2**-precision_bits``.
    """
    W = as_matrix(W)
    m, n = len(W), len(W[0])
    if rank(W) < m:
        raise RankDeficientError("W must have full row rank")
    if hnf(W).square != identity(m):
        raise NotApplicableError("the columns of W do not generate Z^m")
    N = n * det(mat_mul(W, transpose(W)))
    r = isqrt(N)
    if r * r == N:
        root = Fraction(r)
    else:
        scale = 1 << precision_bits
        root = Fraction(isqrt(N * scale * scale) + 1, scale)
    return Fraction(n - m, 2) * root


@dataclass(frozen=True)
class DiagonalFrobeniusReport:
    exact_t: Optional[int]
    delta_bound: int
    aliev_henk_bound: Optional[Fraction]

    def to_json(self) -> dict:
        ah = self.aliev_henk_bound
        return {
            "exact_t": "unresolved" if self.exact_t is None else self.exact_t,
            "paper_bound": self.delta_bound,
            "aliev_henk_bound": "not_applicable" if ah is None else (
                str(ah.numerator) if ah.denominator == 1 else f"{ah.numerator}/{ah.denominator}"),
        }


def frobenius_report(W: Matrix, t_max: Optional[int] = None, z_box: int = 200) -> DiagonalFrobeniusReport:
    inst = FrobeniusInstance(W)
    bound = diagonal_frobenius_bound(inst.m, max(norm_inf(inst.W), 1))
    try:
        ah = aliev_henk_bound(inst.W)
    except NotApplicableError:
        ah = None
    return DiagonalFrobeniusReport(exact_diagonal_frobenius(inst, t_max, z_box), bound, ah)
