from hypothesis import given, settings
from hypothesis import strategies as st

from forallexist.lattice import Lattice, in_parallelepiped, intcone_member_square
from reference import box_points, cramer_solve, in_square_cone, in_square_lattice, leibniz_det


def test_membership_examples():
    L = Lattice([[1, 1], [0, 2]])
    # columns are (1,0) and (1,2); (1,1) is half of their sum
    assert L.contains((1, 0)) and L.contains((1, 2))
    assert not L.contains((0, 1))
    assert not L.contains((1, 1))
    assert L.contains((5, -4))


def test_fundamental_domain_examples():
    assert sorted(Lattice([[1, 1], [0, 2]]).fundamental_domain_points()) == [(0, 0), (1, 1)]
    assert sorted(Lattice([[2, 0], [0, 2]]).fundamental_domain_points()) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert list(Lattice([[1, 0], [0, 1]]).fundamental_domain_points()) == [(0, 0)]


def test_intcone_square_examples():
    W = [[1, 1], [0, 2]]
    assert intcone_member_square(W, (2, 2))
    assert not intcone_member_square(W, (0, 1))
    assert not intcone_member_square(W, (1, 1))
    assert not intcone_member_square(W, (-1, 0))


nonsingular = st.integers(1, 3).flatmap(lambda m: st.lists(
    st.lists(st.integers(-4, 4), min_size=m, max_size=m), min_size=m, max_size=m)).filter(
    lambda A: leibniz_det(A) != 0 and abs(leibniz_det(A)) <= 12)


@settings(max_examples=120, deadline=None)
@given(nonsingular)
def test_residues_partition_box(A):
    L = Lattice(A)
    reps = list(L.fundamental_domain_points())
    assert len(reps) == abs(leibniz_det(A))
    assert len(set(reps)) == len(reps)
    for p in reps:
        assert in_parallelepiped(A, p)
        lam = cramer_solve(A, p)
        assert all(0 <= x < 1 for x in lam)
    m = len(A)
    for v in box_points([-3] * m, [3] * m):
        hits = [p for p in reps if in_square_lattice(A, [a - b for a, b in zip(v, p)])]
        assert len(hits) == 1
        assert L.reduce(v) == hits[0]
        assert L.contains(v) == in_square_lattice(A, v)


@settings(max_examples=80, deadline=None)
@given(nonsingular, st.lists(st.integers(-6, 6), min_size=3, max_size=3))
def test_intcone_square_matches_reference(A, v):
    v = v[:len(A)]
    expected = in_square_lattice(A, v) and in_square_cone(A, v)
    assert intcone_member_square(A, v) == expected
