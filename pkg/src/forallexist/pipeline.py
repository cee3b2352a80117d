"""Reduce a forall-exist statement to a conjunction of orthant problems and solve it.

Chain of rewrites:

1. ``W x <= b`` has an integer solution iff ``b`` lies in the integer cone
   of ``W' = [W | -W | I]``.
2. Integer points of ``Q`` outside ``cone(W')`` are caught directly, one
   integer-feasibility query per facet.
3. Every point of ``cone(W')`` lies in ``cone(W_B)`` for some column basis
   ``B``.  For such ``b``, membership in ``intcone(W')`` is equivalent to
   ``b - c`` lying in ``intcone(W_B)`` for some ``c`` from a finite shift
   set built from the non-basic columns (proximity).
4. Split by residue class ``p`` of ``b`` modulo the lattice of ``W_B`` and
   substitute ``b = W_B y + p``; the condition becomes ``c' <= y``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import ceil, floor
from typing import Dict, List, Optional, Sequence, Tuple

from .bodies import ConvexBody, integer_point_in
from .lattice import Lattice
from .linalg import (
    Matrix,
    Vector,
    as_matrix,
    as_vector,
    column,
    from_columns,
    hstack,
    identity,
    mat_vec,
    norm_inf,
)
from .oracle import DEFAULT_BUDGET, ilp_feasible
from .orthant import iter_counterexamples
from .polyhedra import ColumnBasis, HPolyhedron, cone_facets, enumerate_bases
from .statement import COUNTEREXAMPLE, VALID, InputStatement, Verdict

log = logging.getLogger(__name__)


class InternalError(RuntimeError):
    pass


@dataclass(frozen=True)
class StandardStatement:
    """``for all b in Q ∩ Z^m : b in intcone(W)``."""

    W: Matrix
    Q: ConvexBody


@dataclass(frozen=True)
class ShiftSet:
    elements: Tuple[Vector, ...]
    norm_bound: int
    l1_cap: int

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class OrthantSubproblem:
    Q: ConvexBody
    C: Tuple[Vector, ...]
    W_B: Matrix
    p: Vector
    original_Q: ConvexBody
    basis: Tuple[int, ...] = ()


def to_standard_form(S: InputStatement) -> StandardStatement:
    m = S.m
    negW = tuple(tuple(-x for x in row) for row in S.W)
    return StandardStatement(hstack(S.W, negW, identity(m)), S.Q)


def dedupe_columns(W: Matrix) -> Matrix:
    """Drop zero columns and repeated columns, keeping first occurrences."""
    seen, keep = set(), []
    for j in range(len(W[0])):
        c = column(W, j)
        if any(c) and c not in seen:
            seen.add(c)
            keep.append(c)
    return from_columns(keep, rows=len(W))


def preprocess_cone(S: StandardStatement) -> Optional[Vector]:
    """Integer point of ``Q`` outside ``cone(W)``, or ``None`` to continue."""
    for a in cone_facets(S.W).normals:
        # a.x <= 0 is the facet; look for a.x >= 1
        P = HPolyhedron(S.Q.dim, (tuple(-x for x in a),), (-1,))
        b = integer_point_in(S.Q, P)
        if b is not None:
            return b
    return None


def shift_norm_caps(m: int, delta: int) -> Tuple[int, int]:
    """Multiplicity cap ``m (2 m delta + 1)^m`` and the induced infinity-norm bound."""
    if m < 1:
        raise ValueError("m must be positive")
    delta = max(delta, 1)
    L = m * (2 * m * delta + 1) ** m
    return L, delta * L


def build_shift_set(W: Matrix, B: ColumnBasis, cap: int) -> ShiftSet:
    """All ``W_NB z`` with ``z >= 0`` integral and ``|z|_1 <= cap``.

    The search runs over points rather than over ``z``: a point first
    reached in round ``k`` needs exactly ``k`` generators, so the rounds stop
    at ``cap`` without ever enumerating the (much larger) set of ``z``.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    W = as_matrix(W)
    nb = [column(W, j) for j in range(len(W[0])) if j not in B.indices]
    bound = cap * max((norm_inf(w) for w in nb), default=0)
    return ShiftSet(tuple(sorted(_bounded_sums(nb, len(W), cap))), bound, cap)


def relevant_shifts(W_B: Matrix, C: Sequence[Sequence[int]], box) -> List[Vector]:
    """Drop shifts that cannot lie below any integer point of ``box``.

    ``b - c`` in ``cone(W_B)`` needs ``W_B^{-1} c <= W_B^{-1} b``
    coordinatewise, so ``c`` is useless once some coordinate exceeds the
    largest value that coordinate takes over the box.  Work with
    ``adj = det * W_B^{-1}`` to stay in integers.
    """
    L = Lattice(W_B)
    d = L.det_signed
    ibox = [(ceil(lo), floor(hi)) for lo, hi in box]
    sign = 1 if d > 0 else -1
    caps = [sum(max(sign * a * lo, sign * a * hi) for a, (lo, hi) in zip(row, ibox)) for row in L.adj]
    keep = []
    for c in C:
        if all(sign * x <= u for x, u in zip(L.scaled_coordinates(c), caps)):
            keep.append(tuple(c))
    return keep


def residue_filter_and_split(W_B: Matrix, C: Sequence[Sequence[int]]) -> List[Tuple[Vector, Tuple[Vector, ...]]]:
    L = Lattice(W_B)
    groups: Dict[Vector, List[Vector]] = {p: [] for p in L.fundamental_domain_points()}
    for c in C:
        groups[L.reduce(c)].append(tuple(c))
    return [(p, tuple(cs)) for p, cs in groups.items()]


def basis_cone(W_B: Matrix) -> HPolyhedron:
    return cone_facets(W_B).as_polyhedron()


def to_orthant_problem(W_B: Matrix, p: Sequence[int], C_p: Sequence[Sequence[int]], Q: ConvexBody,
                       basis: Tuple[int, ...] = ()) -> OrthantSubproblem:
    W_B = as_matrix(W_B)
    p = as_vector(p)
    L = Lattice(W_B)
    d = L.det_signed
    C_sub = set()
    for c in C_p:
        num = L.scaled_coordinates(tuple(a - b for a, b in zip(c, p)))
        if any(x % d for x in num):
            raise InternalError(f"shift {c} is not congruent to {p}")
        C_sub.add(tuple(x // d for x in num))
    return OrthantSubproblem(_orthant_body(W_B, p, Q), tuple(sorted(C_sub)), W_B, p, Q, basis)


def _orthant_body(W_B: Matrix, p: Vector, Q: ConvexBody) -> ConvexBody:
    m = len(W_B)
    orthant = HPolyhedron(m, tuple(tuple(-int(i == j) for j in range(m)) for i in range(m)), (0,) * m)
    return Q.restrict(basis_cone(W_B)).affine_preimage(W_B, p).restrict(orthant)


def _bounded_sums(gens: Sequence[Vector], m: int, cap: int) -> List[Vector]:
    """Distinct sums of at most ``cap`` generators (with repetition).

    Breadth-first over points; each point is packed into one integer with a
    per-coordinate offset so a step is a single addition.
    """
    reach = cap * max((abs(x) for g in gens for x in g), default=0)
    base = 2 * reach + 1
    packed_gens = [sum(x * base ** i for i, x in enumerate(g)) for g in gens]
    offset = sum(reach * base ** i for i in range(m))
    seen = {offset}
    frontier = [offset]
    for _ in range(cap):
        nxt = []
        for v in frontier:
            for g in packed_gens:
                u = v + g
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        if not nxt:
            break
        frontier = nxt
    out = []
    for v in seen:
        coords = []
        for _ in range(m):
            v, r = divmod(v, base)
            coords.append(r - reach)
        out.append(tuple(coords))
    return out


def basis_subproblems(W: Matrix, B: ColumnBasis, cap: int, Q: ConvexBody, box) -> Tuple[int, int, List[OrthantSubproblem]]:
    """Shift set, relevance filter, residue split and transform for one basis, fused.

    Same output as chaining ``build_shift_set``, ``relevant_shifts``,
    ``residue_filter_and_split`` and ``to_orthant_problem``, but every shift
    is carried as ``adj(W_B) c`` from the start: the search runs on those
    integer vectors, residues are their coordinates modulo ``det``, and the
    transformed shift is one exact division.  Returns the size of the shift
    set, the number of relevant shifts and the subproblems.
    """
    L = Lattice(B.W_B)
    d = L.det_signed
    D = abs(d)
    sign = 1 if d > 0 else -1
    gens = {L.scaled_coordinates(column(W, j)) for j in range(len(W[0])) if j not in B.indices}
    seen = _bounded_sums(sorted(gens), len(W), cap)
    ibox = [(ceil(lo), floor(hi)) for lo, hi in box]
    caps = [sum(max(sign * a * lo, sign * a * hi) for a, (lo, hi) in zip(row, ibox)) for row in L.adj]
    groups: Dict[Vector, List[Vector]] = {}
    relevant = 0
    for x in seen:
        if all(sign * xi <= u for xi, u in zip(x, caps)):
            relevant += 1
            groups.setdefault(tuple(xi % D for xi in x), []).append(x)
    subs = []
    for p in L.fundamental_domain_points():
        xp = L.scaled_coordinates(p)
        xs = groups.get(tuple(xi % D for xi in xp), ())
        C_sub = sorted({tuple((a - b) // d for a, b in zip(x, xp)) for x in xs})
        subs.append(OrthantSubproblem(_orthant_body(B.W_B, p, Q), tuple(C_sub), B.W_B, p, Q, B.indices))
    return len(seen), relevant, subs


def backmap(v: Sequence[int], sub: OrthantSubproblem) -> Vector:
    b = tuple(x + y for x, y in zip(mat_vec(sub.W_B, v), sub.p))
    if not sub.original_Q.contains(b):
        raise InternalError(f"back-mapped point {b} is not in Q")
    return b


def decide(S: InputStatement, l1_cap: Optional[int] = None, budget: Optional[int] = DEFAULT_BUDGET) -> Verdict:
    """Decide the statement through the reduction chain.

    ``l1_cap`` overrides the proximity multiplicity cap.  Any candidate that
    an orthant subproblem reports is re-checked with the independent oracle
    before it is returned; under a reduced cap, spurious candidates are
    counted in the trace and skipped.  Under the full cap a spurious
    candidate is impossible and raises ``InternalError``.
    """
    std = to_standard_form(S)
    Wp = dedupe_columns(std.W)
    std = StandardStatement(Wp, S.Q)
    m = S.m
    delta = norm_inf(Wp)
    full_cap, norm_bound = shift_norm_caps(m, delta)
    cap = full_cap if l1_cap is None else l1_cap
    trace = {
        "m": m,
        "n": S.n,
        "delta": S.delta,
        "standard_columns": len(Wp[0]),
        "l1_cap": cap,
        "full_cap": full_cap,
        "shift_norm_bound": norm_bound,
        "facets": 0,
        "bases": [],
        "subproblems": 0,
        "cells": 0,
        "rejected_candidates": 0,
    }

    def verified(b: Vector, stage: str) -> Verdict:
        cert = ilp_feasible(S.W, b, budget=budget)
        if cert.feasible:
            raise InternalError(f"{stage} reported {b} but W x <= b is feasible")
        trace["stage"] = stage
        return Verdict(COUNTEREXAMPLE, b, cert, trace)

    trace["facets"] = len(cone_facets(Wp).normals)
    b = preprocess_cone(std)
    if b is not None:
        log.debug("counterexample %s outside cone(W')", b)
        return verified(b, "preprocess")

    checked: Dict[Vector, bool] = {}
    for B in enumerate_bases(Wp):
        reps = B.det_abs
        rec = {"basis": list(B.indices), "det": B.det_abs, "residues": reps,
               "shift_set": 0, "cells": 0, "candidates": 0}
        trace["bases"].append(rec)
        trace["subproblems"] += reps
        QB = S.Q.restrict(basis_cone(B.W_B))
        if integer_point_in(QB) is None:
            rec["skipped"] = "no integer point of Q in cone(W_B)"
            continue
        rec["shift_set"], rec["relevant_shifts"], subs = basis_subproblems(Wp, B, cap, S.Q, QB.outer_box())
        for sub in subs:
            stats: dict = {}
            for v in iter_counterexamples(sub.Q, sub.C, stats=stats):
                b = backmap(v, sub)
                rec["candidates"] += 1
                if b not in checked:
                    checked[b] = ilp_feasible(S.W, b, budget=budget).feasible
                if not checked[b]:
                    rec["cells"] += stats.get("cells", 0)
                    trace["cells"] += stats.get("cells", 0)
                    return verified(b, "orthant")
                if cap >= full_cap:
                    raise InternalError(f"candidate {b} from basis {B.indices} is feasible under the full cap")
                trace["rejected_candidates"] += 1
            rec["cells"] += stats.get("cells", 0)
            trace["cells"] += stats.get("cells", 0)
    return Verdict(VALID, trace=trace)
