"""Deliberately naive ground truth.

``ilp_feasible`` decides ``exists x in Z^n : W x <= b`` without touching
any of the reduction machinery.  Columns of ``W`` are first compressed by a
unimodular transform so the remaining system has full column rank; then
the proximity theorem of Cook, Gerards, Schrijver and Tardos says that if
an integer solution exists, one lies within infinity-distance
``r * D`` of any rational solution, where ``r`` is the number of variables
and ``D`` the largest absolute subdeterminant.  Searching that box is a
complete decision procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .bodies import ConvexBody, iter_integer_points_in
from .linalg import Matrix, Vector, as_matrix, as_vector, column_echelon, det, mat_vec
from .polyhedra import BudgetExceeded, HPolyhedron, find_point, integer_points
from .statement import COUNTEREXAMPLE, VALID, InputStatement, Verdict

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class FeasibilityCertificate:
    b: Vector
    feasible: bool
    x: Optional[Vector] = None
    search_radius: Optional[int] = None
    lp_status: str = ""

    def to_json(self) -> dict:
        if self.feasible:
            return {"outcome": "feasible", "x": list(self.x)}
        return {"outcome": "infeasible", "search_radius": self.search_radius, "lp_status": self.lp_status}


def max_subdeterminant(A: Matrix) -> int:
    m, n = len(A), len(A[0]) if A else 0
    best = 0
    for k in range(1, min(m, n) + 1):
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                best = max(best, abs(det(tuple(tuple(A[i][j] for j in cols) for i in rows))))
    return best


def ilp_feasible(W: Matrix, b: Sequence[int], budget: Optional[int] = DEFAULT_BUDGET) -> FeasibilityCertificate:
    W = as_matrix(W)
    b = as_vector(b)
    n = len(W[0])
    H, U, r = column_echelon(W)
    if r == 0:
        if all(v >= 0 for v in b):
            return FeasibilityCertificate(b, True, (0,) * n)
        return FeasibilityCertificate(b, False, search_radius=0, lp_status="relaxation_empty")
    Hr = tuple(row[:r] for row in H)
    P = HPolyhedron(r, Hr, b)
    y_star = find_point(P)
    if y_star is None:
        return FeasibilityCertificate(b, False, search_radius=0, lp_status="relaxation_empty")
    R = r * max_subdeterminant(Hr)
    box = [(Fraction(v) - R, Fraction(v) + R) for v in y_star]
    y = next(integer_points(P, box, budget=budget), None)
    if y is None:
        return FeasibilityCertificate(b, False, search_radius=R, lp_status="proximity")
    x = mat_vec(U, tuple(y) + (0,) * (n - r))
    if any(lhs > rhs for lhs, rhs in zip(mat_vec(W, x), b)):
        raise AssertionError("oracle produced a witness that violates W x <= b")
    return FeasibilityCertificate(b, True, x)


def ilp_feasible_box_scan(W: Matrix, b: Sequence[int], radius: int) -> Optional[Vector]:
    """Plain scan of ``x in [-radius, radius]^n`` (cross-check for tiny cases)."""
    W = as_matrix(W)
    n = len(W[0])
    P = HPolyhedron(n, W, as_vector(b))
    return next(integer_points(P, [(-radius, radius)] * n), None)


def decide_naive(S: InputStatement, budget: Optional[int] = DEFAULT_BUDGET) -> Verdict:
    """Check every integer ``b`` of ``Q`` in lexicographic order."""
    checked = 0
    for b in iter_integer_points_in(S.Q, budget=budget):
        checked += 1
        cert = ilp_feasible(S.W, b, budget=budget)
        if not cert.feasible:
            return Verdict(COUNTEREXAMPLE, b, cert, {"checked": checked})
    return Verdict(VALID, trace={"checked": checked})


def decide_orthant_naive(Q: ConvexBody, C: Sequence[Sequence[int]], budget: Optional[int] = DEFAULT_BUDGET) -> Optional[Vector]:
    C = [tuple(c) for c in C]
    for b in iter_integer_points_in(Q, budget=budget):
        if not any(all(ci <= bi for ci, bi in zip(c, b)) for c in C):
            return b
    return None


__all__ = [
    "BudgetExceeded",
    "FeasibilityCertificate",
    "decide_naive",
    "decide_orthant_naive",
    "ilp_feasible",
    "ilp_feasible_box_scan",
    "max_subdeterminant",
]
