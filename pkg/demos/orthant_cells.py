"""The terminal problem: is every integer point of Q above some shift c?

The axis-parallel lines x_i = c_i - 1/2 cut the plane into cells on which
coverage is constant, so one test per cell suffices.
"""

from forallexist import BoxBody, solve_orthant
from forallexist.orthant import build_arrangement, cell_representative, covered_by_union

Q = BoxBody([0, 0], [3, 3])
C = [(0, 1), (1, 0)]

arr = build_arrangement(C)
print("thresholds per axis:", arr.thresholds)
for cell in arr.cells():
    rep = cell_representative(cell, arr)
    state = "covered" if covered_by_union(rep, C) else "open"
    print(f"  cell {cell}: integer ranges {arr.cell_bounds(cell)} -> {state}")

print("first uncovered point of Q:", solve_orthant(Q, C))
print("with C = {(0,0)}:", solve_orthant(Q, [(0, 0)]))
