"""Integer points of the fundamental parallelepiped as residue classes."""

from forallexist.lattice import Lattice

for basis in ([[1, 1], [0, 2]], [[2, 0], [0, 2]], [[3, 1], [1, 2]]):
    L = Lattice(basis)
    reps = L.fundamental_domain_points()
    print(f"columns {list(zip(*basis))}: |det| = {L.det_abs}, representatives {list(reps)}")
    counts = {p: 0 for p in reps}
    for x in range(-5, 6):
        for y in range(-5, 6):
            counts[reps.class_of((x, y))] += 1
    print("   points of [-5,5]^2 per class:", counts)
