from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .bodies import ConvexBody
from .linalg import DimensionError, Matrix, Vector, as_matrix, is_integral, norm_inf

VALID = "valid"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class InputStatement:
    """``for all b in Q ∩ Z^m there is x in Z^n with W x <= b``."""

    W: Matrix
    Q: ConvexBody

    def __post_init__(self):
        W = as_matrix(self.W)
        if not is_integral(W):
            raise TypeError("W must be an integer matrix")
        if self.Q.dim != len(W):
            raise DimensionError(f"Q lives in R^{self.Q.dim} but W has {len(W)} rows")
        object.__setattr__(self, "W", W)

    @property
    def m(self) -> int:
        return len(self.W)

    @property
    def n(self) -> int:
        return len(self.W[0])

    @property
    def delta(self) -> int:
        return norm_inf(self.W)


@dataclass
class Verdict:
    status: str
    witness: Optional[Vector] = None
    certificate: Any = None
    trace: Dict[str, Any] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return self.status == VALID

    def to_json(self) -> dict:
        if self.status == VALID:
            return {"status": VALID}
        return {"status": COUNTEREXAMPLE, "b": list(self.witness), "verified": self.certificate is not None}
