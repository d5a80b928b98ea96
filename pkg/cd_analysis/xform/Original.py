"""
Function-originals for the Laplace and Mellin transforms.

For the Laplace transforms func is a function of t in R with
    |f(t)| <= C exp(s0 t)      for t >= 0
    |f(t)| <= C exp(s1 t)      for t < 0 (two-sided originals)
For Mellin originals func is g(tau), tau > 0, with
    |g(tau)| <= C tau^{-s0}    for 0 < tau < 1
    |g(tau)| <= C tau^{-s1}    for tau >= 1
Infinite exponents mean faster-than-exponential decay; the quadrature then picks its own
truncation.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
import math
from typing import Any, Callable, Sequence


import numpy as np


from cd_analysis.algebra.CdNumber import CdNumber
from logger.logger import Logger
logger = Logger(logger_name=__name__)


SUPPORTS = ("right", "two_sided", "multiplicative")
GROWTH_SLACK = 1e-9


@dataclass(frozen=True)
class Original:
    func: Callable[[float], Any] = field(compare=False)
    s0: float = 0.0
    s1: float = math.inf
    support: str = "right"
    discontinuities: tuple[float, ...] = ()
    bound: float = 1.0
    name: str = ""

    def __post_init__(self):
        if self.support not in SUPPORTS:
            raise ValueError(f"Unknown support '{self.support}', expected one of {SUPPORTS}")
        if self.bound <= 0.0:
            raise ValueError(f"Growth constant must be positive, got {self.bound}")
        if self.support == "multiplicative" and any(d <= 0.0 for d in self.discontinuities):
            raise ValueError("Mellin originals live on tau > 0")
        object.__setattr__(self, "discontinuities", tuple(sorted(float(d) for d in self.discontinuities)))

    def __call__(self, t: float) -> CdNumber:
        if self.support == "right" and t < 0.0:
            return CdNumber.real(0.0)
        return CdNumber.coerce(self.func(float(t)))

    @property
    def strip(self) -> tuple[float, float]:
        return self.s0, (math.inf if self.support == "right" else self.s1)

    def as_two_sided(self) -> Original:
        """
        The two-sided Laplace original f(t) = g(e^t) of a Mellin original: the growth
        exponents swap sides and change sign.
        """
        if self.support != "multiplicative":
            return self
        g = self.func
        return replace(self,
                       func=lambda t: g(math.exp(t)),
                       s0=-self.s1,
                       s1=-self.s0,
                       support="two_sided",
                       discontinuities=tuple(math.log(d) for d in self.discontinuities),
                       name=f"{self.name or 'g'}(exp t)")

    def growth_violation(self, span: float = 20.0, n: int = 64) -> float:
        """
        Largest ratio |f(t)| / (C exp(s0 t)) (and the t < 0 counterpart) over n sample points;
        values above 1 break the declared growth. Infinite exponents are not sampled.
        """
        f = self.as_two_sided()
        worst = 0.0
        ts = np.linspace(0.0, span, n)
        if math.isfinite(f.s0):
            worst = max(worst, max(f(t).norm() / (f.bound * math.exp(f.s0 * t)) for t in ts))
        if f.support == "two_sided" and math.isfinite(f.s1):
            worst = max(worst, max(f(-t).norm() / (f.bound * math.exp(-f.s1 * t)) for t in ts[1:]))
        return worst

    def validate(self) -> Original:
        worst = self.growth_violation()
        if worst > 1.0 + GROWTH_SLACK:
            raise ValueError(f"Original '{self.name}' exceeds its declared growth by a factor {worst:.3g}")
        return self

    @classmethod
    def from_components(cls, funcs: Sequence[Callable[[float], float]], generators: Sequence[Any], **kwargs) -> Original:
        """f(t) = sum_j f_j(t) N_j for real-valued f_j."""
        generators = [CdNumber.coerce(N) for N in generators]
        if len(funcs) != len(generators):
            raise ValueError(f"{len(funcs)} components but {len(generators)} generators")

        def combined(t: float) -> CdNumber:
            total = None
            for f_j, N_j in zip(funcs, generators):
                term = N_j * float(f_j(t))
                total = term if total is None else total + term
            return total

        return cls(func=combined, **kwargs)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "support": self.support,
            "s0": self.s0,
            "s1": self.s1,
            "bound": self.bound,
            "discontinuities": list(self.discontinuities),
        }
