import random
from fractions import Fraction
from math import isqrt

import pytest

from forallexist.frobenius import (
    IntconeOracle,
    NotApplicableError,
    NotPointedError,
    aliev_henk_bound,
    diagonal_frobenius_bound,
    exact_diagonal_frobenius,
    frobenius_report,
    pointed_functional,
)
from forallexist.generators import random_pointed_matrix
from forallexist.lattice import Lattice
from forallexist.linalg import hnf
from forallexist.oracle import ilp_feasible
from reference import box_points, frobenius_number, in_cone_caratheodory


def in_intcone_reference(W, z):
    n = len(W[0])
    rows = [list(r) for r in W] + [[-x for x in r] for r in W] + [[-int(i == j) for j in range(n)] for i in range(n)]
    return ilp_feasible(rows, list(z) + [-x for x in z] + [0] * n).feasible


def bad_points_reference(W, t, radius):
    m = len(W)
    shift = [t * sum(r) for r in W]
    L = Lattice(hnf(W).square)
    out = []
    for z in box_points([-radius] * m, [radius] * m):
        if not L.contains(z):
            continue
        if in_cone_caratheodory(W, [a - b for a, b in zip(z, shift)]) and not in_intcone_reference(W, z):
            out.append(z)
    return out


@pytest.mark.parametrize("gens", [[1], [3, 5], [2, 3], [3, 4, 5], [4, 7], [5, 6, 9]])
def test_one_row_matches_semigroup_formula(gens):
    g = frobenius_number(gens)
    s = sum(gens)
    expected = next(t for t in range(100) if t * s > g)
    assert exact_diagonal_frobenius([gens]) == expected


def test_listed_instances():
    assert frobenius_report([[3, 5]]).to_json() == {
        "exact_t": 1, "paper_bound": 11, "aliev_henk_bound": "17293559/4194304"}
    assert exact_diagonal_frobenius([[1, 0, 1], [0, 1, 1]]) == 0
    assert exact_diagonal_frobenius([[1]]) == 0


def test_bound_formula():
    assert diagonal_frobenius_bound(1, 5) == 11
    assert diagonal_frobenius_bound(2, 1) == 50


def test_aliev_henk_envelope():
    W = [[3, 5]]
    ah = aliev_henk_bound(W)
    assert Fraction(17, 4) > ah >= Fraction(1, 2) * Fraction(isqrt(2 * 34 * 10**12), 10**6)
    assert (2 * ah) ** 2 >= 2 * 34
    # I_2 with (1,1): n det(W W^T) = 3 * 3 = 9
    assert aliev_henk_bound([[1, 0, 1], [0, 1, 1]]) == Fraction(3, 2)
    with pytest.raises(NotApplicableError):
        aliev_henk_bound([[2, 4]])
    assert frobenius_report([[2, 4]]).to_json()["aliev_henk_bound"] == "not_applicable"


def test_not_pointed():
    with pytest.raises(NotPointedError):
        pointed_functional([[1, -1]])
    with pytest.raises(NotPointedError):
        frobenius_report([[1, 0, -1], [0, 1, 0]])


def test_unresolved_is_explicit():
    assert exact_diagonal_frobenius([[3, 5]], z_box=5) is None
    assert frobenius_report([[3, 5]], z_box=5).to_json()["exact_t"] == "unresolved"


def test_intcone_oracle_matches_semigroup():
    oracle = IntconeOracle([[3, 5]], (1,))
    members = {v for v in range(40) if (v,) in oracle}
    gaps = {1, 2, 4, 7}
    assert members == set(range(40)) - gaps
    assert (-3,) not in oracle


@pytest.mark.parametrize("seed", range(12))
def test_random_pointed_against_reference(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 2)
    W = random_pointed_matrix(rng, m, rng.randint(m, m + 1), rng.randint(1, 3))
    t = exact_diagonal_frobenius(W)
    assert t is not None
    delta = max(abs(x) for r in W for x in r)
    assert t <= diagonal_frobenius_bound(m, delta)
    rowsum = max(sum(abs(x) for x in r) for r in W)
    assert bad_points_reference(W, t, (t + 1) * rowsum) == []
    if t > 0:
        assert bad_points_reference(W, t - 1, t * rowsum) != []


def test_monotone_in_level():
    rng = random.Random(77)
    for _ in range(6):
        W = random_pointed_matrix(rng, 2, 3, 3)
        t = exact_diagonal_frobenius(W)
        rowsum = max(sum(abs(x) for x in r) for r in W)
        for s in range(t, t + 3):
            assert bad_points_reference(W, s, (s + 1) * rowsum) == []
