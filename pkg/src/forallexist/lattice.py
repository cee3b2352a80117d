"""Full-dimensional integer lattices and their residue classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor
from typing import List, Tuple

from .linalg import (
    DimensionError,
    HnfResult,
    Matrix,
    SingularMatrixError,
    Vector,
    as_matrix,
    as_vector,
    det,
    hnf,
    inverse,
    mat_vec,
)


def _lower_solve(H: Matrix, v) -> Tuple[Fraction, ...]:
    """Forward substitution for a lower-triangular ``H``."""
    m = len(H)
    x: List[Fraction] = []
    for i in range(m):
        s = Fraction(v[i]) - sum(H[i][j] * x[j] for j in range(i))
        x.append(s / H[i][i])
    return tuple(x)


@dataclass(frozen=True)
class Lattice:
    """The lattice ``{B z : z integral}`` of a nonsingular square basis ``B``."""

    basis: Matrix
    hnf: HnfResult = field(init=False, repr=False, compare=False)
    det_abs: int = field(init=False)
    inv: Matrix = field(init=False, repr=False, compare=False)
    adj: Matrix = field(init=False, repr=False, compare=False)
    det_signed: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        B = as_matrix(self.basis)
        if len(B) != len(B[0]):
            raise DimensionError("lattice basis must be square")
        d = det(B)
        if d == 0:
            raise SingularMatrixError("lattice basis is singular")
        object.__setattr__(self, "basis", B)
        object.__setattr__(self, "hnf", hnf(B))
        object.__setattr__(self, "det_abs", abs(d))
        inv = inverse(B)
        object.__setattr__(self, "inv", inv)
        # integer adjugate: inv == adj / det, so hot loops never touch Fraction
        object.__setattr__(self, "adj", tuple(tuple(int(x * d) for x in row) for row in inv))
        object.__setattr__(self, "det_signed", d)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        if len(v) != self.dim:
            raise DimensionError("vector dimension does not match the lattice")
        H = self.hnf.square
        # Integer forward substitution; bail out on the first non-integral coordinate.
        r = list(v)
        for i in range(self.dim):
            q, rem = divmod(r[i], H[i][i])
            if rem:
                return False
            for k in range(i + 1, self.dim):
                r[k] -= q * H[k][i]
        return True

    def scaled_coordinates(self, v) -> Tuple[int, ...]:
        """``det * B^{-1} v`` as integers."""
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.adj)

    def reduce(self, v) -> Vector:
        """The unique point of ``v + Λ`` inside the fundamental parallelepiped of ``basis``."""
        d = self.det_signed
        shift = [c // d for c in self.scaled_coordinates(v)]
        return tuple(a - sum(b * s for b, s in zip(row, shift)) for a, row in zip(v, self.basis))

    def fundamental_domain_points(self) -> "ResidueSet":
        H = self.hnf.square
        diag = [H[i][i] for i in range(self.dim)]
        Binv = self.inv
        reps = []
        # Points with 0 <= u_i < H_ii form a complete residue system for a
        # lower-triangular basis; map each into the parallelepiped of ``basis``.
        for u in product(*(range(d) for d in diag)):
            lam = mat_vec(Binv, u)
            shift = tuple(floor(x) for x in lam)
            reps.append(as_vector(a - b for a, b in zip(u, mat_vec(self.basis, shift))))
        reps.sort()
        return ResidueSet(self, tuple(reps))


@dataclass(frozen=True)
class ResidueSet:
    lattice: Lattice
    representatives: Tuple[Vector, ...]

    def __len__(self):
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)

    def class_of(self, v) -> Vector:
        """Representative congruent to ``v``."""
        return self.lattice.reduce(v)


def fundamental_domain_points(L: Lattice) -> ResidueSet:
    return L.fundamental_domain_points()


def in_parallelepiped(basis: Matrix, v) -> bool:
    lam = mat_vec(inverse(basis), v)
    return all(0 <= x < 1 for x in lam)


def intcone_member_square(Wb: Matrix, v) -> bool:
    """Membership in the integer cone of a nonsingular square matrix.

    Uses ``intcone(Wb) = cone(Wb) ∩ Λ(Wb)``: the coordinates of ``v`` in the
    basis must be integral and nonnegative.
    """
    Wb = as_matrix(Wb)
    if len(v) != len(Wb):
        raise DimensionError("vector dimension does not match the matrix")
    lam = mat_vec(inverse(Wb), v)
    return all(isinstance(x, int) and x >= 0 for x in lam)
