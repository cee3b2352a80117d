"""Diagonal Frobenius numbers next to the two upper bounds."""

from forallexist import frobenius_report

for W in ([[1]], [[3, 5]], [[2, 3]], [[3, 4, 5]], [[1, 0, 1], [0, 1, 1]], [[2, 1, 0], [0, 1, 2]]):
    r = frobenius_report(W).to_json()
    print(f"W = {W}: t* = {r['exact_t']}, m(2m delta + 1)^m bound = {r['paper_bound']}, "
          f"Aliev-Henk = {r['aliev_henk_bound']}")
