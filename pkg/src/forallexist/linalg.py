"""Exact integer and rational matrix arithmetic.

Matrices are plain tuples of row tuples holding ``int`` or
``fractions.Fraction`` entries.  Every routine here is exact; nothing ever
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional, Sequence, Tuple, Union

Scalar = Union[int, Fraction]
Vector = Tuple[Scalar, ...]
Matrix = Tuple[Tuple[Scalar, ...], ...]


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


class RankDeficientError(ValueError):
    pass


def _normalize(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return _normalize(Fraction(x))
    raise TypeError(f"non-exact matrix entry {x!r}")


def as_matrix(rows, cols: Optional[int] = None) -> Matrix:
    """Coerce a sequence of rows into an immutable exact matrix.

    Fractions with unit denominator are collapsed to ``int`` so integral
    matrices always compare equal regardless of how they were produced.
    """
    out = tuple(tuple(_normalize(x) for x in row) for row in rows)
    if not out:
        raise DimensionError("matrix needs at least one row")
    width = len(out[0]) if cols is None else cols
    if any(len(r) != width for r in out):
        raise DimensionError("ragged matrix")
    return out


def as_vector(v) -> Vector:
    return tuple(_normalize(x) for x in v)


def shape(A: Matrix) -> Tuple[int, int]:
    return len(A), len(A[0])


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def column(A: Matrix, j: int) -> Vector:
    return tuple(row[j] for row in A)


def columns(A: Matrix) -> Tuple[Vector, ...]:
    return tuple(column(A, j) for j in range(len(A[0])))


def from_columns(cols: Sequence[Sequence[Scalar]], rows: Optional[int] = None) -> Matrix:
    cols = [tuple(c) for c in cols]
    if not cols:
        if rows is None:
            raise DimensionError("cannot infer row count of a matrix with no columns")
        return tuple(() for _ in range(rows))
    return as_matrix(zip(*cols))


def hstack(*blocks: Matrix) -> Matrix:
    m = len(blocks[0])
    if any(len(b) != m for b in blocks):
        raise DimensionError("row counts differ")
    return tuple(sum((tuple(b[i]) for b in blocks), ()) for i in range(m))


def norm_inf(A) -> int:
    """Largest absolute entry of a matrix or vector (0 when empty)."""
    if A and isinstance(A[0], (tuple, list)):
        return max((abs(x) for row in A for x in row), default=0)
    return max((abs(x) for x in A), default=0)


def dot(u, v) -> Scalar:
    return sum(a * b for a, b in zip(u, v))


def mat_vec(A: Matrix, v) -> Vector:
    if len(A[0]) != len(v):
        raise DimensionError(f"cannot apply {len(A)}x{len(A[0])} matrix to vector of length {len(v)}")
    return tuple(_normalize(dot(row, v)) for row in A)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if len(A[0]) != len(B):
        raise DimensionError(f"inner dimensions differ: {len(A[0])} vs {len(B)}")
    Bt = tuple(zip(*B))
    return tuple(tuple(_normalize(dot(row, col)) for col in Bt) for row in A)


def is_integral(A) -> bool:
    if A and isinstance(A[0], (tuple, list)):
        return all(isinstance(x, int) for row in A for x in row)
    return all(isinstance(x, int) for x in A)


def det(A: Matrix) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [list(r) for r in A]
    if not is_integral(as_matrix(A)):
        raise TypeError("det expects an integer matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for p in range(k + 1, n):
                if M[p][k] != 0:
                    M[k], M[p] = M[p], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def inverse(A: Matrix) -> Matrix:
    """Exact rational inverse via fraction-free Gauss-Jordan on ``[A | I]``.

    After full elimination every pivot equals ``±det(A)`` and the right
    block holds ``det(A) * A^-1``; only the final division creates fractions.
    """
    A = as_matrix(A)
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionError("inverse of a non-square matrix")
    if not is_integral(A):
        raise TypeError("inverse expects an integer matrix")
    M = [list(A[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    prev = 1
    for k in range(n):
        if M[k][k] == 0:
            for p in range(k + 1, n):
                if M[p][k] != 0:
                    M[k], M[p] = M[p], M[k]
                    break
            else:
                raise SingularMatrixError("matrix is singular")
        pk = M[k][k]
        for i in range(n):
            if i == k:
                continue
            f = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(2 * n):
                row_i[j] = (pk * row_i[j] - f * row_k[j]) // prev
        prev = pk
    d = M[0][0]
    return tuple(tuple(_normalize(Fraction(M[i][n + j], d)) for j in range(n)) for i in range(n))


def solve(A: Matrix, b) -> Vector:
    """Solve the square nonsingular system ``A x = b`` exactly."""
    return mat_vec(inverse(A), b)


def rank(A: Matrix) -> int:
    M = [[Fraction(x) for x in row] for row in A]
    if not M or not M[0]:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, rows):
            if M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return r


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


@dataclass(frozen=True)
class HnfResult:
    """Column-style Hermite normal form ``W @ U == H``.

    ``H`` is ``m x n`` with a lower-triangular leading ``m x m`` block and
    zero trailing columns.
    """

    H: Matrix
    U: Matrix

    @property
    def square(self) -> Matrix:
        m = len(self.H)
        return tuple(row[:m] for row in self.H)


def column_echelon(A: Matrix) -> Tuple[Matrix, Matrix, int]:
    """Unimodular column reduction of an arbitrary integer matrix.

    Returns ``(H, U, r)`` with ``A @ U == H``, ``|det U| == 1`` and the
    first ``r`` columns of ``H`` linearly independent (the rest zero).
    Pivot rows are strictly increasing, pivots positive, and entries left of
    a pivot are reduced into ``[0, pivot)``.
    """
    A = as_matrix(A)
    if not is_integral(A):
        raise TypeError("column_echelon expects an integer matrix")
    m, n = shape(A)
    H = [list(r) for r in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop(dst: int, src: int, a: int, b: int, c: int, d: int) -> None:
        # (col_dst, col_src) <- (a*col_dst + b*col_src, c*col_dst + d*col_src)
        for M in (H, U):
            for row in M:
                x, y = row[dst], row[src]
                row[dst], row[src] = a * x + b * y, c * x + d * y

    r = 0
    for i in range(m):
        if r == n:
            break
        for j in range(r + 1, n):
            if H[i][j] == 0:
                continue
            x, y = H[i][r], H[i][j]
            g, s, t = xgcd(x, y)
            # [[s, -y/g], [t, x/g]] has determinant 1
            colop(r, j, s, t, -y // g, x // g)
        if H[i][r] == 0:
            continue
        if H[i][r] < 0:
            for M in (H, U):
                for row in M:
                    row[r] = -row[r]
        piv = H[i][r]
        for j in range(r):
            q = H[i][j] // piv
            if q:
                for M in (H, U):
                    for row in M:
                        row[j] -= q * row[r]
        r += 1
    return as_matrix(H), as_matrix(U), r


def hnf(A: Matrix) -> HnfResult:
    """Hermite normal form of a full-row-rank integer matrix."""
    A = as_matrix(A)
    H, U, r = column_echelon(A)
    if r < len(A):
        raise RankDeficientError("hnf requires full row rank")
    return HnfResult(H, U)


def primitive_normal(S: Matrix, m: Optional[int] = None) -> Optional[Vector]:
    """Primitive integer normal of the hyperplane spanned by ``m - 1`` columns.

    ``S`` is given as an ``m x (m-1)`` matrix (pass ``m`` explicitly when
    ``m == 1`` and ``S`` has no columns).  Returns ``None`` when the columns
    do not span a hyperplane.  The sign is fixed by making the first nonzero
    entry positive.
    """
    if m is None:
        m = len(S)
    k = len(S[0]) if S and S[0] is not None and len(S) else 0
    if k != m - 1:
        raise DimensionError(f"expected {m - 1} columns, got {k}")
    # Generalized cross product: signed maximal minors.
    a = []
    for i in range(m):
        minor = tuple(S[r] for r in range(m) if r != i)
        a.append((-1) ** i * det(minor) if k else 1)
    g = 0
    for x in a:
        g = gcd(g, x)
    if g == 0:
        return None
    a = [x // g for x in a]
    first = next(x for x in a if x)
    if first < 0:
        a = [-x for x in a]
    return tuple(a)


def nonzero_minors(A: Matrix, size: int):
    """Yield ``(column_indices, det)`` for every nonsingular ``size``-column square submatrix."""
    n = len(A[0])
    for idx in combinations(range(n), size):
        sub = tuple(tuple(row[j] for j in idx) for row in A)
        d = det(sub)
        if d:
            yield idx, d
