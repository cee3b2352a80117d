"""Decide forall-exist integer statements ``for all b in Q ∩ Z^m, exists x in Z^n: W x <= b``."""

from .bodies import BallBody, BoxBody, ConvexBody, PolyBody, integer_point_in
from .frobenius import aliev_henk_bound, diagonal_frobenius_bound, exact_diagonal_frobenius, frobenius_report
from .oracle import decide_naive, decide_orthant_naive, ilp_feasible
from .orthant import solve as solve_orthant
from .pipeline import decide
from .polyhedra import HPolyhedron
from .statement import COUNTEREXAMPLE, VALID, InputStatement, Verdict

__version__ = "0.1.0"

__all__ = [
    "BallBody",
    "BoxBody",
    "COUNTEREXAMPLE",
    "ConvexBody",
    "HPolyhedron",
    "InputStatement",
    "PolyBody",
    "VALID",
    "Verdict",
    "aliev_henk_bound",
    "decide",
    "decide_naive",
    "decide_orthant_naive",
    "diagonal_frobenius_bound",
    "exact_diagonal_frobenius",
    "frobenius_report",
    "ilp_feasible",
    "integer_point_in",
    "solve_orthant",
]
