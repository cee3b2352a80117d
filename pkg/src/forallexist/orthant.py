"""Decide ``for all b in Q ∩ Z^m there is c in C with c <= b``.

The half-integral hyperplanes ``x_i = c_i - 1/2`` cut space into boxes
(cells).  Inside one cell either every point is dominated by some ``c`` or
none is, so one representative per cell settles coverage, and an
uncovered cell only needs an integer-feasibility query against ``Q``.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from .bodies import ConvexBody, iter_integer_points_in
from .linalg import Vector
from .polyhedra import HPolyhedron

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Arrangement:
    thresholds: Tuple[Tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.thresholds)

    @property
    def counts(self) -> Tuple[int, ...]:
        return tuple(len(t) for t in self.thresholds)

    def n_cells(self) -> int:
        n = 1
        for k in self.counts:
            n *= k + 1
        return n

    def cell_bounds(self, cell: Sequence[int]):
        """Integer range ``[lo, hi]`` (``None`` for infinite) of each coordinate in ``cell``.

        The real cell is ``l_j - 1/2 <= x_i <= l_{j+1} - 1/2``; its integer
        points are exactly ``l_j <= x_i <= l_{j+1} - 1``.
        """
        out = []
        for ths, j in zip(self.thresholds, cell):
            lo = ths[j - 1] if j > 0 else None
            hi = ths[j] - 1 if j < len(ths) else None
            out.append((lo, hi))
        return out

    def cell_polyhedron(self, cell: Sequence[int]) -> HPolyhedron:
        return HPolyhedron.from_box(self.cell_bounds(cell))

    def cells(self) -> Iterator[Tuple[int, ...]]:
        return product(*(range(k + 1) for k in self.counts))


def build_arrangement(C: Sequence[Sequence[int]], dim: Optional[int] = None) -> Arrangement:
    C = [tuple(c) for c in C]
    if dim is None:
        if not C:
            raise ValueError("dimension required for an empty shift set")
        dim = len(C[0])
    return Arrangement(tuple(tuple(sorted({c[i] for c in C})) for i in range(dim)))


def cell_representative(cell: Sequence[int], arr: Arrangement) -> Tuple[Fraction, ...]:
    x = []
    for ths, j in zip(arr.thresholds, cell):
        k = len(ths)
        if k == 0:
            x.append(Fraction(0))
        elif j == 0:
            x.append(Fraction(ths[0] - 1))
        elif j == k:
            x.append(Fraction(ths[-1] + 1))
        else:
            x.append(Fraction(ths[j - 1] + ths[j], 2) - HALF)
    return tuple(x)


def covered_by_union(x, C: Sequence[Sequence[int]]) -> bool:
    return any(all(v >= ci - HALF for v, ci in zip(x, c)) for c in C)


def _box_pruned(C, box):
    """Drop shifts that exceed the box somewhere and clamp the rest to its lower corner.

    For ``b`` inside the box, ``c <= b`` iff ``max(c, lo) <= b``, so this
    never changes which box points are covered.
    """
    out = set()
    for c in C:
        if any(ci > hi for ci, (_, hi) in zip(c, box)):
            continue
        out.add(tuple(max(ci, lo) for ci, (lo, _) in zip(c, box)))
    return sorted(out)


def _cell_ranges(arr: Arrangement, box) -> List[range]:
    """Cell indices per coordinate whose integer range meets ``[lo, hi]``."""
    out = []
    for ths, (lo, hi) in zip(arr.thresholds, box):
        # cell j holds integers in [ths[j-1], ths[j]-1]
        first = bisect_right(ths, lo)
        last = bisect_right(ths, hi)
        out.append(range(first, last + 1))
    return out


def iter_counterexamples(Q: ConvexBody, C: Sequence[Sequence[int]], prune: bool = True,
                         stats: Optional[dict] = None) -> Iterator[Vector]:
    """Every integer point of ``Q`` not dominated by any element of ``C``.

    Cells are visited in lexicographic order of their index tuples and the
    points inside a cell lexicographically, so the output is deterministic.
    """
    C = [tuple(c) for c in C]
    box = Q.integer_box()
    if any(lo > hi for lo, hi in box):
        return
    if prune:
        C = _box_pruned(C, box)
    arr = build_arrangement(C, Q.dim)
    cells = product(*_cell_ranges(arr, box)) if prune else arr.cells()
    for cell in cells:
        if stats is not None:
            stats["cells"] = stats.get("cells", 0) + 1
        if covered_by_union(cell_representative(cell, arr), C):
            continue
        if stats is not None:
            stats["uncovered_cells"] = stats.get("uncovered_cells", 0) + 1
        yield from iter_integer_points_in(Q, arr.cell_polyhedron(cell))


def solve(Q: ConvexBody, C: Sequence[Sequence[int]], prune: bool = True) -> Optional[Vector]:
    """First counterexample in cell order, or ``None`` if the statement holds."""
    return next(iter_counterexamples(Q, C, prune=prune), None)
