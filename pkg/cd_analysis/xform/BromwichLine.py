from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Any


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import DomainOfConvergence, OutOfDomain
from config.config import INITIAL_TRUNCATION

DIRECTION_TOL = 1e-12


@dataclass(frozen=True)
class BromwichLine:
    """
    The inversion line p(tau) = a + S tau. S is normalized on construction; truncation is the
    initial half-width B of the principal-value integral.
    """
    a: float
    S: Any = None
    truncation: float = INITIAL_TRUNCATION

    def __post_init__(self):
        S = CdNumber.basis(1, 2) if self.S is None else CdNumber.coerce(self.S)
        if abs(S.re) > DIRECTION_TOL or S.norm() == 0.0:
            raise OutOfDomain(f"Line direction must be nonzero and purely imaginary, got {S}")
        if not math.isfinite(self.a):
            raise ValueError(f"Line anchor must be finite, got {self.a}")
        if self.truncation <= 0.0:
            raise ValueError(f"Truncation must be positive, got {self.truncation}")
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "S", S / S.norm())

    def point(self, tau: float) -> CdNumber:
        return self.S * tau + self.a

    def check_strip(self, s0: float, s1: float = math.inf) -> None:
        if not s0 < self.a < s1:
            raise DomainOfConvergence(f"Line anchor {self.a} is outside the strip ({s0}, {s1})")

    def mirrored(self) -> BromwichLine:
        """The line -a + S tau, used to turn Mellin inversion into Laplace inversion."""
        return BromwichLine(-self.a, self.S, self.truncation)

    def to_json(self) -> dict:
        return {"a": self.a, "S": self.S.to_json(), "truncation": self.truncation}
