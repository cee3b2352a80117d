"""Slow textbook reference implementations, independent of the package."""

from fractions import Fraction
from itertools import permutations, product


def leibniz_det(A):
    n = len(A)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= A[i][perm[i]]
        total += term
    return total


def minor(A, i, j):
    return [row[:j] + row[j + 1:] for k, row in enumerate(A) if k != i]


def adjugate_inverse(A):
    n = len(A)
    A = [list(r) for r in A]
    d = leibniz_det(A)
    if n == 1:
        return [[Fraction(1, d)]]
    return [[Fraction((-1) ** (i + j) * leibniz_det(minor(A, j, i)), d) for j in range(n)] for i in range(n)]


def cramer_solve(A, b):
    n = len(A)
    d = leibniz_det(A)
    out = []
    for k in range(n):
        Ak = [list(row) for row in A]
        for i in range(n):
            Ak[i][k] = b[i]
        out.append(Fraction(leibniz_det(Ak), d))
    return out


def in_square_lattice(B, v):
    """v in the lattice spanned by the columns of square nonsingular B."""
    return all(x.denominator == 1 for x in cramer_solve(B, v))


def in_square_cone(B, v):
    return all(x >= 0 for x in cramer_solve(B, v))


def box_points(lo, hi):
    return product(*[range(a, b + 1) for a, b in zip(lo, hi)])


def frobenius_number(gens):
    """Largest integer outside the numerical semigroup (gcd 1), -1 if none."""
    limit = max(gens) * max(gens) + max(gens)
    reach = [False] * (limit + 1)
    reach[0] = True
    for v in range(1, limit + 1):
        reach[v] = any(v >= g and reach[v - g] for g in gens)
    gaps = [v for v in range(limit + 1) if not reach[v]]
    return max(gaps) if gaps else -1


def vertices(A, d):
    """Vertices of {x : A x <= d} by brute-force basic solutions."""
    from itertools import combinations
    n = len(A[0])
    out = set()
    for rows in combinations(range(len(A)), n):
        M = [list(A[i]) for i in rows]
        if leibniz_det(M) == 0:
            continue
        x = tuple(cramer_solve(M, [d[i] for i in rows]))
        if all(sum(a * xi for a, xi in zip(A[k], x)) <= d[k] for k in range(len(A))):
            out.add(x)
    return out


def in_cone_caratheodory(W, v):
    """v in cone(W) for full-row-rank W, via every square column basis."""
    from itertools import combinations
    m, n = len(W), len(W[0])
    for cols in combinations(range(n), m):
        B = [[W[i][j] for j in cols] for i in range(m)]
        if leibniz_det(B) != 0 and in_square_cone(B, v):
            return True
    return False
