"""Bounded convex sets presented through a membership oracle.

Every body answers three queries: exact membership of a rational point,
an enclosing box, and its preimage under an invertible affine map.  Bodies
also expose a linear relaxation (constraints known to hold for all members)
which integer scans use to prune; membership remains the final word.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from itertools import product
from math import ceil, floor, lcm
from typing import Iterator, List, Optional, Sequence

from .linalg import DimensionError, Matrix, Vector, as_matrix, as_vector, inverse
from .polyhedra import HPolyhedron, Interval, UnboundedError, bounding_box, integer_points


class ConvexBody(ABC):
    dim: int

    @abstractmethod
    def contains(self, x) -> bool:
        ...

    @abstractmethod
    def outer_box(self) -> List[Interval]:
        """Finite box containing every member; ``lo > hi`` on some axis means empty."""

    def relaxation(self) -> HPolyhedron:
        return HPolyhedron.from_box(self.outer_box())

    def affine_preimage(self, T: Matrix, t=None) -> "ConvexBody":
        return PreimageBody(self, T, t)

    def restrict(self, P: HPolyhedron) -> "ConvexBody":
        return RestrictedBody(self, P)

    def integer_box(self):
        """Integer ranges ``[lo, hi]`` per coordinate of ``outer_box``."""
        return [(ceil(lo), floor(hi)) for lo, hi in self.outer_box()]

    def is_empty_box(self) -> bool:
        return any(lo > hi for lo, hi in self.integer_box())


def _box(lo, hi) -> List[Interval]:
    return [(Fraction(a), Fraction(b)) for a, b in zip(lo, hi)]


class BoxBody(ConvexBody):
    def __init__(self, lo: Sequence, hi: Sequence):
        if len(lo) != len(hi):
            raise DimensionError("box bounds differ in length")
        self.lo = tuple(Fraction(x) for x in lo)
        self.hi = tuple(Fraction(x) for x in hi)
        self.dim = len(self.lo)

    def contains(self, x) -> bool:
        return all(a <= v <= b for a, v, b in zip(self.lo, x, self.hi))

    def outer_box(self):
        return _box(self.lo, self.hi)

    def __repr__(self):
        return f"BoxBody({[str(x) for x in self.lo]}, {[str(x) for x in self.hi]})"


class PolyBody(ConvexBody):
    def __init__(self, P: HPolyhedron):
        self.P = P
        self.dim = P.dim
        box = bounding_box(P)
        if box is None:
            self._box = [(Fraction(1), Fraction(0))] * P.dim
        else:
            if any(lo is None or hi is None for lo, hi in box):
                raise UnboundedError("polytope body must be bounded")
            self._box = box

    def contains(self, x) -> bool:
        return self.P.contains(x)

    def outer_box(self):
        return list(self._box)

    def relaxation(self):
        return self.P

    def __repr__(self):
        return f"PolyBody({len(self.P.A)} constraints in R^{self.dim})"


class BallBody(ConvexBody):
    """Euclidean ball; membership compares squared distances exactly."""

    def __init__(self, center: Sequence, radius):
        self.center = tuple(Fraction(x) for x in center)
        self.radius = Fraction(radius)
        if self.radius < 0:
            raise ValueError("negative radius")
        self.dim = len(self.center)

    def contains(self, x) -> bool:
        return sum((v - c) ** 2 for v, c in zip(x, self.center)) <= self.radius ** 2

    def outer_box(self):
        r = self.radius
        return [(c - r, c + r) for c in self.center]

    def __repr__(self):
        return f"BallBody({[str(c) for c in self.center]}, {self.radius})"


class PreimageBody(ConvexBody):
    """``{x : T x + t in base}`` for a nonsingular square ``T``."""

    def __init__(self, base: ConvexBody, T: Matrix, t=None):
        T = as_matrix(T)
        if len(T) != base.dim or len(T[0]) != base.dim:
            raise DimensionError("preimage map must be square of the body's dimension")
        self._Tinv = _rat_inverse(T)
        self.base = base
        self.T = T
        self.t = as_vector(t) if t is not None else (0,) * base.dim
        self.dim = base.dim

    def _image(self, x):
        return tuple(sum(a * v for a, v in zip(row, x)) + s for row, s in zip(self.T, self.t))

    def contains(self, x) -> bool:
        return self.base.contains(self._image(x))

    def outer_box(self):
        bbox = self.base.outer_box()
        if any(lo > hi for lo, hi in bbox):
            return [(Fraction(1), Fraction(0))] * self.dim
        lo = [None] * self.dim
        hi = [None] * self.dim
        for corner in product(*bbox):
            y = [c - s for c, s in zip(corner, self.t)]
            x = [sum(a * v for a, v in zip(row, y)) for row in self._Tinv]
            for i, v in enumerate(x):
                lo[i] = v if lo[i] is None else min(lo[i], v)
                hi[i] = v if hi[i] is None else max(hi[i], v)
        return [(Fraction(a), Fraction(b)) for a, b in zip(lo, hi)]

    def relaxation(self):
        return self.base.relaxation().affine_preimage(self.T, self.t)

    def __repr__(self):
        return f"PreimageBody({self.base!r}, T={self.T}, t={self.t})"


class RestrictedBody(ConvexBody):
    """Intersection of a body with a polyhedron."""

    def __init__(self, base: ConvexBody, P: HPolyhedron):
        if P.dim != base.dim:
            raise DimensionError("restriction polyhedron has the wrong dimension")
        self.base = base
        self.P = P
        self.dim = base.dim
        self._box = None

    def contains(self, x) -> bool:
        return self.P.contains(x) and self.base.contains(x)

    def outer_box(self):
        if self._box is None:
            outer = self.base.outer_box()
            if any(lo > hi for lo, hi in outer):
                self._box = outer
            else:
                tight = bounding_box(self.relaxation().intersect(HPolyhedron.from_box(outer)))
                if tight is None:
                    self._box = [(Fraction(1), Fraction(0))] * self.dim
                else:
                    self._box = [(lo, hi) for lo, hi in tight]
        return list(self._box)

    def relaxation(self):
        return self.base.relaxation().intersect(self.P)

    def __repr__(self):
        return f"RestrictedBody({self.base!r}, {len(self.P.A)} constraints)"


def _rat_inverse(T: Matrix) -> Matrix:
    """Inverse of a rational square matrix (scaled to integers first)."""
    L = 1
    for row in T:
        for x in row:
            if isinstance(x, Fraction):
                L = lcm(L, x.denominator)
    S = tuple(tuple(int(x * L) for x in row) for row in T)
    Sinv = inverse(S)
    return tuple(tuple(x * L for x in row) for row in Sinv)


def affine_preimage(Q: ConvexBody, T: Matrix, t=None) -> ConvexBody:
    return Q.affine_preimage(T, t)


def iter_integer_points_in(Q: ConvexBody, P: Optional[HPolyhedron] = None, budget: Optional[int] = None) -> Iterator[Vector]:
    """Integer points of ``Q ∩ P`` in lexicographic order."""
    box = Q.outer_box()
    if any(lo > hi for lo, hi in box):
        return
    R = Q.relaxation()
    if P is not None:
        if P.dim != Q.dim:
            raise DimensionError("polyhedron and body dimensions differ")
        R = R.intersect(P)
    for x in integer_points(R, box, budget=budget):
        if Q.contains(x):
            yield x


def integer_point_in(Q: ConvexBody, P: Optional[HPolyhedron] = None, budget: Optional[int] = None) -> Optional[Vector]:
    """First integer point of ``Q ∩ P`` or ``None``."""
    return next(iter_integer_points_in(Q, P, budget), None)


# -- JSON ---------------------------------------------------------------------

def _rat(x) -> Fraction:
    if isinstance(x, float):
        raise ValueError(f"floating point value {x!r} not allowed; use a 'p/q' string")
    return Fraction(x)


def body_from_dict(data: dict) -> ConvexBody:
    kind = data.get("type")
    if kind == "box":
        return BoxBody([_rat(v) for v in data["lo"]], [_rat(v) for v in data["hi"]])
    if kind == "polytope":
        A = [[_rat(v) for v in row] for row in data["A"]]
        d = [_rat(v) for v in data["d"]]
        dim = len(A[0]) if A else int(data["dim"])
        return PolyBody(HPolyhedron(dim, tuple(map(tuple, A)), tuple(d)))
    if kind == "ball":
        return BallBody([_rat(v) for v in data["center"]], _rat(data["radius"]))
    raise ValueError(f"unknown body type {kind!r}")


def _fmt(x: Fraction):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def body_to_dict(Q: ConvexBody) -> dict:
    if isinstance(Q, BoxBody):
        return {"type": "box", "lo": [_fmt(v) for v in Q.lo], "hi": [_fmt(v) for v in Q.hi]}
    if isinstance(Q, PolyBody):
        return {
            "type": "polytope",
            "A": [[_fmt(v) for v in row] for row in Q.P.A],
            "d": [_fmt(v) for v in Q.P.d],
        }
    if isinstance(Q, BallBody):
        return {"type": "ball", "center": [_fmt(v) for v in Q.center], "radius": _fmt(Q.radius)}
    raise TypeError(f"{type(Q).__name__} has no JSON form")
