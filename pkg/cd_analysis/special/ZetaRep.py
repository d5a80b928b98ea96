from __future__ import annotations

from dataclasses import dataclass
import math


from cd_analysis.exceptions import DomainOfRepresentation
from config.config import QUAD_TOL


REPRESENTATIONS = ("euler_maclaurin", "strip", "reflected", "hankel", "mellin_digamma")

# Open strips lo < Re z < hi.
DOMAINS = {
    "euler_maclaurin": (-1.0, math.inf),
    "strip": (-1.0, 0.0),
    "reflected": (-math.inf, 0.0),
    "hankel": (-math.inf, math.inf),
    "mellin_digamma": (0.0, 1.0),
}


@dataclass(frozen=True)
class ZetaRep:
    """
    How zeta is evaluated.

    Attributes:
        representation: one of REPRESENTATIONS.
        terms: unit intervals summed exactly before the Bernoulli tail; None picks 20 + |z|.
        corrections: Bernoulli terms in the tail of the sawtooth integral.
        tol: tolerance of the quadratures and contour integrals, and of the tail bound.
        hankel_radius: radius of the circle around 0 in the Hankel contour, inside (0, 2 pi).
    """
    representation: str = "euler_maclaurin"
    terms: int | None = None
    corrections: int = 12
    tol: float = QUAD_TOL
    hankel_radius: float = 1.0

    def __post_init__(self):
        if self.representation not in REPRESENTATIONS:
            raise ValueError(f"Unknown representation '{self.representation}', expected one of {REPRESENTATIONS}")
        if self.terms is not None and self.terms < 2:
            raise ValueError(f"Need at least 2 exact intervals, got {self.terms}")
        if not 1 <= self.corrections <= 30:
            raise ValueError(f"Bernoulli corrections must lie in 1..30, got {self.corrections}")
        if not 0.0 < self.hankel_radius < 2.0 * math.pi:
            raise ValueError(f"Hankel radius must lie in (0, 2 pi), got {self.hankel_radius}")

    @classmethod
    def coerce(cls, rep: ZetaRep | str | None, sigma: float) -> ZetaRep:
        """None or "auto" picks euler_maclaurin for Re z > -1 and reflected otherwise."""
        if isinstance(rep, ZetaRep):
            return rep
        if rep in (None, "auto"):
            return cls("euler_maclaurin" if sigma > -1.0 else "reflected")
        return cls(rep)

    @property
    def domain(self) -> tuple[float, float]:
        return DOMAINS[self.representation]

    def contains(self, sigma: float) -> bool:
        lo, hi = self.domain
        return lo < sigma < hi

    def check(self, sigma: float) -> None:
        if not self.contains(sigma):
            lo, hi = self.domain
            raise DomainOfRepresentation(f"The {self.representation} representation needs {lo} < Re z < {hi}, got {sigma}")

    def to_json(self) -> dict:
        return {
            "representation": self.representation,
            "terms": self.terms,
            "corrections": self.corrections,
            "tol": self.tol,
            "hankel_radius": self.hankel_radius,
        }
