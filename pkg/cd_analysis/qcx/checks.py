"""
Finite-difference probes of the pseudo-conformality conditions and of the derivative
compatibility F'(R y).(R h) = R[g'(y).h] for rotation-family extensions.
"""
from __future__ import annotations

from dataclasses import dataclass
import itertools
import math
from typing import Any, Callable


import numpy as np


from .ExtensionSpec import ExtensionSpec
from .extension import eval_extension
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import OutOfDomain, StepUnderflow
from cd_analysis.rotor.rotation import build_rotation
from cd_analysis.transcend.elementary import axis_of
from config.config import FD_STEP_SCALE, ZERO_EPSILON
from logger.logger import Logger
logger = Logger(logger_name=__name__)


@dataclass(frozen=True, slots=True)
class PseudoConformalReport:
    """
    antiholomorphy: (1/2)|D(1) + M D(M)| in the plane of xi
    angle_change: largest change of angle between direction pairs of that plane
    min_stretch: smallest |D(h)| over sampled unit directions h
    """
    antiholomorphy: float
    angle_change: float
    min_stretch: float

    def to_json(self) -> dict:
        return {"antiholomorphy": self.antiholomorphy, "angle_change": self.angle_change, "min_stretch": self.min_stretch}


def _step(xi: CdNumber) -> float:
    return FD_STEP_SCALE * max(1.0, xi.norm())


def directional_derivative(f: Callable[[CdNumber], Any], xi: CdNumber, h: CdNumber, delta: float) -> CdNumber:
    """Central difference (f(xi + delta h) - f(xi - delta h)) / (2 delta)."""
    forward = xi + h * delta
    if (forward - xi).norm() == 0.0:
        raise StepUnderflow(f"Step {delta} along {h} is lost in floating point at {xi}")
    backward = xi - h * delta
    return (CdNumber.coerce(f(forward)) - CdNumber.coerce(f(backward))) / (2.0 * delta)


def _angle(a: CdNumber, b: CdNumber) -> float | None:
    level = max(a.level, b.level)
    na, nb = a.norm(), b.norm()
    if na <= ZERO_EPSILON or nb <= ZERO_EPSILON:
        return None
    cosine = float(a.embed(level).coeffs @ b.embed(level).coeffs) / (na * nb)
    return math.acos(min(1.0, max(-1.0, cosine)))


def check_pseudo_conformal(f: Callable[[CdNumber], Any],
                           xi: Any,
                           h_samples: int = 32,
                           seed: int = 0,
                           ) -> PseudoConformalReport:
    xi = CdNumber.coerce(xi)
    level = max(xi.level, 1)
    xi = xi.embed(level)
    delta = _step(xi)
    M = axis_of(xi).embed(level)
    one = CdNumber.real(1.0, level)

    d_one = directional_derivative(f, xi, one, delta)
    d_m = directional_derivative(f, xi, M, delta)
    antiholomorphy = 0.5 * (d_one + M * d_m).norm()

    plane_angles = np.linspace(0.0, math.pi, 7)[:-1]
    plane_dirs = [one * math.cos(t) + M * math.sin(t) for t in plane_angles]
    plane_derivs = [directional_derivative(f, xi, h, delta) for h in plane_dirs]
    angle_change = 0.0
    for (h1, d1), (h2, d2) in itertools.combinations(zip(plane_dirs, plane_derivs), 2):
        image_angle = _angle(d1, d2)
        if image_angle is None:
            continue
        angle_change = max(angle_change, abs(image_angle - _angle(h1, h2)))

    rng = np.random.default_rng(seed)
    directions = [CdNumber.basis(j, level) for j in range(2 ** level)]
    for _ in range(h_samples):
        u = rng.normal(size=2 ** level)
        directions.append(CdNumber(u / np.linalg.norm(u), level))
    min_stretch = min(directional_derivative(f, xi, h, delta).norm() for h in directions)

    report = PseudoConformalReport(float(antiholomorphy), float(angle_change), float(min_stretch))
    logger.debug(f"Pseudo-conformal residuals at {xi}: {report.to_json()}")
    return report


def check_q7(spec: ExtensionSpec, z: Any, y: Any, h: Any) -> float:
    """
    |F'(z).(R h) - R[g'(y).h]| with R = R_{z,y}, y the complex partner of z and h a complex
    direction. F' is a central difference of the extension; g'(y) is the derivative of the seed
    along the real axis, so seeds that are not holomorphic show a residual.
    """
    z = CdNumber.coerce(z, spec.level)
    y = CdNumber.coerce(y)
    h = CdNumber.coerce(h)
    if h.min_level() > 1 or y.min_level() > 1:
        raise OutOfDomain("y and h must be complex")
    if h.norm() == 0.0:
        return 0.0
    R = build_rotation(z, y, (1, spec.level))
    delta = _step(z)

    lhs = directional_derivative(lambda w: eval_extension(spec, w), z, R.apply(h.embed(spec.level)), delta)
    seed_step = complex(spec.seed_derivative(y.to_complex(), 1.0)) * h.to_complex()
    rhs = R.apply(CdNumber.from_complex(seed_step, spec.level))
    return (lhs - rhs).norm()
