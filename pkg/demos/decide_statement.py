"""Decide a few small forall-exist statements and compare with brute force."""

from fractions import Fraction

from forallexist import BallBody, BoxBody, InputStatement, decide, decide_naive, ilp_feasible

cases = {
    "x <= b for every b in [-3, 3]": InputStatement([[1]], BoxBody([-3], [3])),
    "2x <= b1, -2x <= b2 over [1,1] x [-1,1]": InputStatement([[2], [-2]], BoxBody([1, -1], [1, 1])),
    "x1 + x2 <= b1, x1 - x2 <= b2 over a disc": InputStatement(
        [[1, 1], [1, -1]], BallBody([Fraction(1, 2), 0], Fraction(5, 2))),
}

for label, S in cases.items():
    fast = decide(S)
    slow = decide_naive(S)
    print(f"{label}\n  pipeline: {fast.status}   brute force: {slow.status}")
    if not fast.valid:
        b = fast.witness
        # the oracle searched a certified box around the LP point and found nothing
        cert = ilp_feasible(S.W, b)
        print(f"  witness b = {b}, oracle says {cert.to_json()}")
