"""Seeded random instances for the randomized suites."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional

from .bodies import BallBody, BoxBody, ConvexBody, PolyBody
from .frobenius import NotPointedError, pointed_functional
from .linalg import rank
from .polyhedra import HPolyhedron
from .statement import InputStatement


def random_matrix(rng: random.Random, m: int, n: int, delta: int) -> List[List[int]]:
    W = [[rng.randint(-delta, delta) for _ in range(n)] for _ in range(m)]
    if all(x == 0 for row in W for x in row):
        W[rng.randrange(m)][rng.randrange(n)] = rng.choice([-delta, delta]) or 1
    return W


def random_box(rng: random.Random, m: int, max_width: int, span: int = 4) -> BoxBody:
    lo = [rng.randint(-span, span) for _ in range(m)]
    hi = [a + rng.randint(0, max_width) for a in lo]
    return BoxBody(lo, hi)


def random_polytope(rng: random.Random, m: int, span: int = 4) -> PolyBody:
    """A box with one or two random cuts (always bounded, possibly empty of integer points)."""
    box = random_box(rng, m, 6, span)
    A = list(HPolyhedron.from_box(box.outer_box()).A)
    d = list(HPolyhedron.from_box(box.outer_box()).d)
    center = [(a + b) / 2 for a, b in zip(box.lo, box.hi)]
    for _ in range(rng.randint(1, 2)):
        a = [rng.randint(-2, 2) for _ in range(m)]
        if not any(a):
            a[0] = 1
        offset = Fraction(rng.randint(-2, 4), rng.randint(1, 2))
        A.append(tuple(a))
        d.append(sum(x * c for x, c in zip(a, center)) + offset)
    return PolyBody(HPolyhedron(m, tuple(A), tuple(d)))


def random_ball(rng: random.Random, m: int, span: int = 4) -> BallBody:
    center = [Fraction(rng.randint(-2 * span, 2 * span), 2) for _ in range(m)]
    radius = Fraction(rng.randint(1, 7), 2)
    return BallBody(center, radius)


def random_statement(rng: random.Random, m: Optional[int] = None, n: Optional[int] = None,
                     delta: Optional[int] = None, kind: str = "box", max_width: int = 6) -> InputStatement:
    m = m if m is not None else rng.randint(1, 2)
    n = n if n is not None else rng.randint(1, 3)
    delta = delta if delta is not None else rng.randint(1, 2)
    W = random_matrix(rng, m, n, delta)
    if kind == "box":
        Q: ConvexBody = random_box(rng, m, max_width)
    elif kind == "polytope":
        Q = random_polytope(rng, m)
    elif kind == "ball":
        Q = random_ball(rng, m)
    else:
        raise ValueError(f"unknown body kind {kind!r}")
    return InputStatement(W, Q)


def random_pointed_matrix(rng: random.Random, m: int, n: int, delta: int, tries: int = 1000) -> List[List[int]]:
    """Random full-row-rank ``W`` whose cone is pointed."""
    for _ in range(tries):
        W = [[rng.randint(-delta, delta) for _ in range(n)] for _ in range(m)]
        if rank(W) < m or any(not any(row[j] for row in W) for j in range(n)):
            continue
        try:
            pointed_functional(W)
        except NotPointedError:
            continue
        return W
    raise RuntimeError("no pointed matrix found")
