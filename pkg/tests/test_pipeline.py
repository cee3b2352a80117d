import random

import pytest

from forallexist.bodies import BoxBody
from forallexist.generators import random_statement
from forallexist.lattice import intcone_member_square
from forallexist.linalg import from_columns
from forallexist.oracle import decide_naive, ilp_feasible
from forallexist.pipeline import (
    OrthantSubproblem,
    StandardStatement,
    backmap,
    basis_cone,
    basis_subproblems,
    build_shift_set,
    decide,
    dedupe_columns,
    preprocess_cone,
    relevant_shifts,
    residue_filter_and_split,
    shift_norm_caps,
    to_orthant_problem,
    to_standard_form,
)
from forallexist.polyhedra import cone_facets, enumerate_bases
from forallexist.statement import COUNTEREXAMPLE, VALID, InputStatement


def test_standard_form_examples():
    assert to_standard_form(InputStatement([[1]], BoxBody([0], [1]))).W == ((1, -1, 1),)
    W = to_standard_form(InputStatement([[1, 0], [0, 1]], BoxBody([0, 0], [1, 1]))).W
    assert W == ((1, 0, -1, 0, 1, 0), (0, 1, 0, -1, 0, 1))
    assert dedupe_columns(W) == ((1, 0, -1, 0), (0, 1, 0, -1))


def test_preprocess_examples():
    std = StandardStatement(((1, -1, 1),), BoxBody([-3], [3]))
    assert cone_facets(std.W).normals == () and preprocess_cone(std) is None
    std = StandardStatement(from_columns([(1, 0), (1, 1)]), BoxBody([-2, -2], [2, 2]))
    b = preprocess_cone(std)
    assert b is not None and (b[1] > b[0] or b[1] < 0)
    std = StandardStatement(from_columns([(1, 0), (1, 1)]), BoxBody([1, 0], [2, 1]))
    assert preprocess_cone(std) is None


def test_shift_caps():
    assert shift_norm_caps(1, 1) == (3, 3)
    assert shift_norm_caps(1, 5) == (11, 55)
    assert shift_norm_caps(2, 1) == (50, 50)


def basis(W, idx):
    return next(b for b in enumerate_bases(W) if b.indices == idx)


def test_shift_set_examples():
    W = from_columns([(1, 0), (0, 1), (1, 1)])
    B = basis(W, (0, 1))
    assert build_shift_set(W, B, 2).elements == ((0, 0), (1, 1), (2, 2))
    assert build_shift_set(W, B, 0).elements == ((0, 0),)
    W = from_columns([(1, 1), (2, 1), (1, 0), (0, 1)])
    assert set(build_shift_set(W, basis(W, (0, 1)), 1).elements) == {(0, 0), (1, 0), (0, 1)}


def test_residue_split_examples():
    C = [(0, 0), (1, 0), (3, 4)]
    assert residue_filter_and_split([[1, 0], [0, 1]], C) == [((0, 0), tuple(C))]
    split = dict(residue_filter_and_split([[2, 0], [0, 1]], [(0, 0), (1, 0)]))
    assert split == {(0, 0): ((0, 0),), (1, 0): ((1, 0),)}
    split = dict(residue_filter_and_split([[2, 0], [0, 1]], [(0, 0), (2, 3)]))
    assert split[(1, 0)] == ()


def test_orthant_transform_examples():
    Q = BoxBody([0, 0], [6, 6])
    sub = to_orthant_problem([[1, 0], [0, 1]], (0, 0), [(1, 2), (0, 3)], Q)
    assert set(sub.C) == {(1, 2), (0, 3)}
    assert to_orthant_problem([[2, 0], [0, 1]], (1, 0), [(1, 0)], Q).C == ((0, 0),)
    assert to_orthant_problem([[1, 1], [0, 2]], (0, 0), [(2, 2)], Q).C == ((1, 1),)


def test_backmap_examples():
    Q = BoxBody([0, 0], [6, 6])
    ident = OrthantSubproblem(Q, (), ((1, 0), (0, 1)), (0, 0), Q)
    assert backmap((2, 3), ident) == (2, 3)
    sub = OrthantSubproblem(Q, (), ((2, 0), (0, 1)), (1, 0), Q)
    assert backmap((1, 1), sub) == (3, 1)


def test_decide_examples():
    assert decide(InputStatement([[1]], BoxBody([-3], [3]))).status == VALID
    v = decide(InputStatement([[-1], [1]], BoxBody([-1, 0], [-1, 0])))
    assert v.status == COUNTEREXAMPLE and v.witness == (-1, 0)
    assert decide(InputStatement([[2]], BoxBody([0], [4]))).status == VALID


def test_decide_counterexample_inside_cone():
    # the slack column makes a single row always feasible
    assert decide(InputStatement([[2, -2]], BoxBody([-3], [3]))).status == VALID
    S = InputStatement([[1, 1], [1, -1]], BoxBody([-2, -2], [2, 2]))
    assert decide(S).status == decide_naive(S).status == VALID
    # 2x <= b1 and -2x <= b2 need an even number in [-b2, b1]
    S = InputStatement([[2], [-2]], BoxBody([-2, -2], [2, 2]))
    v, o = decide(S), decide_naive(S)
    assert v.status == o.status == COUNTEREXAMPLE
    assert v.trace["stage"] == "preprocess"
    # inside the cone b1 + b2 >= 0 only parity can fail: (1, -1) asks for x = 1/2
    S = InputStatement([[2], [-2]], BoxBody([1, -1], [1, 1]))
    v = decide(S)
    assert v.status == COUNTEREXAMPLE and v.witness == (1, -1)
    assert v.trace["stage"] == "orthant"
    assert not ilp_feasible(S.W, v.witness).feasible


def trace_subproblems(trace):
    return sum(b["det"] for b in trace["bases"])


@pytest.mark.parametrize("seed", range(30))
def test_agrees_with_oracle_and_trace_is_consistent(seed):
    rng = random.Random(seed)
    S = random_statement(rng, m=rng.randint(1, 2), n=rng.randint(1, 3), delta=1, max_width=4)
    v = decide(S)
    o = decide_naive(S)
    assert v.status == o.status
    if v.status == COUNTEREXAMPLE:
        assert S.Q.contains(v.witness)
        assert not ilp_feasible(S.W, v.witness).feasible
    else:
        assert v.trace["subproblems"] == trace_subproblems(v.trace)
        assert v.trace["rejected_candidates"] == 0


@pytest.mark.parametrize("seed", range(15))
def test_monotone_cap(seed):
    rng = random.Random(100 + seed)
    S = random_statement(rng, m=2, n=2, delta=2, max_width=4)
    statuses = [decide(S, l1_cap=cap).status for cap in (1, 2, 4, 8)]
    for a, b in zip(statuses, statuses[1:]):
        if a == VALID:
            assert b == VALID
    assert statuses[-1] == decide_naive(S).status


def test_shift_set_covers_cone_points_small():
    rng = random.Random(3)
    checked = 0
    while checked < 25:
        S = random_statement(rng, m=2, n=2, delta=1)
        Wp = dedupe_columns(to_standard_form(S).W)
        full, _ = shift_norm_caps(2, 1)
        B = rng.choice(enumerate_bases(Wp))
        C = build_shift_set(Wp, B, full)
        F = cone_facets(B.W_B)
        for b in [(x, y) for x in range(-4, 5) for y in range(-4, 5)]:
            if not F.contains(b):
                continue
            # every integer point is in intcone(W') because the slack block spans both signs
            assert any(intcone_member_square(B.W_B, tuple(x - y for x, y in zip(b, c))) for c in C)
            checked += 1


@pytest.mark.parametrize("seed", range(20))
def test_fused_basis_stage_matches_step_by_step(seed):
    rng = random.Random(400 + seed)
    S = random_statement(rng, m=rng.randint(1, 2), n=rng.randint(1, 3), delta=2)
    Wp = dedupe_columns(to_standard_form(S).W)
    cap = rng.randint(0, 6)
    for B in enumerate_bases(Wp):
        box = S.Q.restrict(basis_cone(B.W_B)).outer_box()
        if any(lo > hi for lo, hi in box):
            continue
        C = build_shift_set(Wp, B, cap)
        kept = relevant_shifts(B.W_B, C, box)
        steps = [to_orthant_problem(B.W_B, p, C_p, S.Q, B.indices)
                 for p, C_p in residue_filter_and_split(B.W_B, kept)]
        size, relevant, fused = basis_subproblems(Wp, B, cap, S.Q, box)
        assert size == len(C) and relevant == len(kept)
        assert [(s.p, s.C) for s in fused] == sorted((s.p, s.C) for s in steps)


def test_relevant_shifts_never_drop_a_useful_shift():
    rng = random.Random(9)
    for _ in range(30):
        S = random_statement(rng, m=2, n=2, delta=2)
        Wp = dedupe_columns(to_standard_form(S).W)
        B = rng.choice(enumerate_bases(Wp))
        C = build_shift_set(Wp, B, 3)
        box = S.Q.outer_box()
        kept = set(relevant_shifts(B.W_B, C, box))
        (x0, x1), (y0, y1) = [(int(lo), int(hi)) for lo, hi in box]
        pts = [(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)]
        for c in C:
            useful = any(cone_facets(B.W_B).contains(tuple(a - b for a, b in zip(q, c))) for q in pts)
            if useful:
                assert c in kept
