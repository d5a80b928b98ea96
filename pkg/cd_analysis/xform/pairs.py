"""
Closed-form transform pairs and a checker that compares them with the quadrature engine.
Every image below is a real-coefficient function of p, so it extends to H and O by acting on
the plane of p.
"""
from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Any, Callable, Sequence


from scipy import special


from .Original import Original
from .TransformSpec import TransformSpec
from .transforms import transform
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.transcend.elementary import exp, plane_apply, sin
from logger.logger import Logger
logger = Logger(logger_name=__name__)


@dataclass(frozen=True)
class TransformPair:
    name: str
    original: Original
    image: Callable[[CdNumber], CdNumber]

    @property
    def strip(self) -> tuple[float, float]:
        return self.original.strip


def unit_step() -> TransformPair:
    return TransformPair("unit step", Original(func=lambda t: 1.0, s0=0.0, name="U"),
                         lambda p: p.inverse())


def shifted_exponential(a: float = -1.0) -> TransformPair:
    return TransformPair(f"exp({a} t) U", Original(func=lambda t: math.exp(a * t), s0=a, name=f"exp({a} t)"),
                         lambda p: (p - a).inverse())


def gaussian(alpha: float = 1.0) -> TransformPair:
    original = Original(func=lambda t: math.exp(-alpha * t * t), s0=-math.inf, s1=math.inf,
                        support="two_sided", name=f"exp(-{alpha} t^2)")
    scale = math.sqrt(math.pi / alpha)
    return TransformPair(original.name, original, lambda p: exp(p * p / (4.0 * alpha)) * scale)


def two_sided_exponential(alpha: float = 1.0) -> TransformPair:
    original = Original(func=lambda t: 0.5 * math.exp(-alpha * abs(t)), s0=-alpha, s1=alpha,
                        support="two_sided", bound=0.5, name=f"exp(-{alpha}|t|)/2")
    return TransformPair(original.name, original, lambda p: (p * p - alpha * alpha).inverse() * (-alpha))


def logistic() -> TransformPair:
    original = Original(func=lambda t: float(special.expit(-t)), s0=-1.0, s1=0.0,
                        support="two_sided", name="1/(exp(t)+1)")
    return TransformPair(original.name, original, lambda p: sin(p * math.pi).inverse() * (-math.pi))


def gamma_mellin(c: float = 1.0) -> TransformPair:
    """g(tau) = exp(-c tau) with Mellin image c^{-p} Gamma(p)."""
    original = Original(func=lambda tau: math.exp(-c * tau), s0=0.0, s1=math.inf,
                        support="multiplicative", name=f"exp(-{c} tau)")

    def G(p: CdNumber) -> CdNumber:
        return exp(p * (-math.log(c))) * plane_apply(lambda w: complex(special.gamma(w)), p)

    return TransformPair(original.name, original, G)


PAIRS: dict[str, Callable[..., TransformPair]] = {
    "step": unit_step,
    "shifted_exponential": shifted_exponential,
    "gaussian": gaussian,
    "two_sided_exponential": two_sided_exponential,
    "logistic": logistic,
    "gamma": gamma_mellin,
}


def laplace_pair_check(pair: TransformPair | str, probes: Sequence[Any], spec: TransformSpec | None = None) -> float:
    """Largest relative difference between the computed transform and the closed form."""
    if isinstance(pair, str):
        if pair not in PAIRS:
            raise ValueError(f"Unknown pair '{pair}', expected one of {sorted(PAIRS)}")
        pair = PAIRS[pair]()
    spec = spec or TransformSpec()
    worst = 0.0
    for p in probes:
        p = CdNumber.coerce(p, spec.level)
        computed = transform(pair.original, p, spec)
        expected = pair.image(p)
        worst = max(worst, (computed - expected).norm() / max(expected.norm(), 1e-300))
    logger.debug(f"Pair '{pair.name}': worst relative residual {worst:.3e} over {len(probes)} probes")
    return worst
