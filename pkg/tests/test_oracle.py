import random

import pytest

from forallexist.bodies import BoxBody
from forallexist.oracle import (
    decide_naive,
    decide_orthant_naive,
    ilp_feasible,
    ilp_feasible_box_scan,
    max_subdeterminant,
)
from forallexist.polyhedra import BudgetExceeded
from forallexist.statement import COUNTEREXAMPLE, VALID, InputStatement


def test_feasibility_examples():
    c = ilp_feasible([[2]], [5])
    assert c.feasible and 2 * c.x[0] <= 5
    assert not ilp_feasible([[-1], [1]], [-1, 0]).feasible
    # 3a + 5b = 7 with a, b >= 0 written as inequalities
    W = [[3, 5], [-3, -5], [-1, 0], [0, -1]]
    assert not ilp_feasible(W, [7, -7, 0, 0]).feasible
    assert ilp_feasible(W, [8, -8, 0, 0]).feasible


def test_decide_naive_examples():
    assert decide_naive(InputStatement([[1]], BoxBody([0], [5]))).status == VALID
    v = decide_naive(InputStatement([[-1], [1]], BoxBody([-2, -2], [2, 2])))
    assert v.status == COUNTEREXAMPLE
    b = v.witness
    assert -b[0] > b[1]


def test_orthant_naive_examples():
    Q = BoxBody([0, 0], [3, 3])
    assert decide_orthant_naive(Q, [(0, 1), (1, 0)]) == (0, 0)
    assert decide_orthant_naive(Q, [(0, 0)]) is None
    assert decide_orthant_naive(Q, []) == (0, 0)


def test_max_subdeterminant():
    assert max_subdeterminant([[1, 2], [3, 4]]) == 4
    assert max_subdeterminant([[1, 1], [1, -1]]) == 2


@pytest.mark.parametrize("seed", range(80))
def test_matches_box_scan(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 3), rng.randint(1, 3)
    W = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(m)]
    b = [rng.randint(-4, 4) for _ in range(m)]
    cert = ilp_feasible(W, b)
    # with |W| <= 2, |b| <= 4 and n <= 3, any feasible system has a solution of small norm
    scan = ilp_feasible_box_scan(W, b, 12)
    assert cert.feasible == (scan is not None)
    if cert.feasible:
        assert all(sum(W[i][j] * cert.x[j] for j in range(n)) <= b[i] for i in range(m))


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        decide_naive(InputStatement([[1]], BoxBody([0], [100])), budget=10)
