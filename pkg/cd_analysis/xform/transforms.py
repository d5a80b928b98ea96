"""
Forward transforms.

    laplace            F(p)   = int_0^inf f(t) exp(-u(p, t; q)) dt
    laplace_two_sided  F^s(p) = int_0^inf f(t) exp(-u(p, t; q)) dt + int_0^inf f(-t) exp(-u(-p, t; q)) dt
    mellin             M(g;p) = F^s(-p; -q) of f(t) = g(e^t)

Each half line is integrated with Gauss-Kronrod panels on [0, T]. For a finite growth margin
s = Re p - s0 the cut T makes the majorant C exp(-s T) / s of the tail smaller than tol / 10.
"""
from __future__ import annotations

import math
from typing import Any, Callable


import numpy as np
from scipy.integrate import quad_vec


from .Original import Original
from .TransformSpec import TransformSpec
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import (CdAnalysisError, DomainOfConvergence, EmptyStrip, LevelMismatch,
                                    QuadratureFailure)
from cd_analysis.transcend.elementary import exp, exp_derivative
from config.config import INITIAL_TRUNCATION, MAX_DOUBLINGS, QUAD_LIMIT
from logger.logger import Logger
logger = Logger(logger_name=__name__)


STRIP_MARGIN = 1e-6
MAX_TRUNCATION = INITIAL_TRUNCATION * 2 ** MAX_DOUBLINGS


def _argument(p: Any, spec: TransformSpec) -> CdNumber:
    p = CdNumber.coerce(p)
    if p.level > spec.level:
        raise LevelMismatch(f"p = {p} does not fit transforms of level {spec.level}")
    return p.embed(spec.level)


def _value(orig: Original, t: float, level: int) -> CdNumber:
    try:
        value = orig(t)
    except (ArithmeticError, ValueError) as e:
        raise QuadratureFailure(f"Original '{orig.name}' failed at t = {t}: {e}") from e
    if value.level > level:
        raise LevelMismatch(f"Original '{orig.name}' has level {value.level}, transforms run on level {level}")
    return value.embed(level)


def half_line_integrand(orig: Original,
                        p: CdNumber,
                        spec: TransformSpec,
                        sign: int = 1,
                        direction: CdNumber | None = None,
                        ) -> Callable[[float], np.ndarray]:
    """
    t -> f(sign t) exp(-u(sign p, t; q)) as a coefficient array. With a direction h the kernel
    is replaced by its derivative along h with respect to p (linear kernel only).
    """
    sp = p * float(sign)

    def integrand(t: float) -> np.ndarray:
        w = spec.exponent(sp, t)
        if direction is None:
            kernel = exp(-w)
        else:
            kernel = exp_derivative(-w, direction * (-sign * t))
        return (_value(orig, sign * t, spec.level) * kernel).coeffs

    return integrand


def _truncation(integrand: Callable[[float], np.ndarray], margin: float, bound: float, tol: float) -> float:
    if math.isfinite(margin):
        T = max(1.0, math.log(max(bound / (0.1 * tol * margin), 1.0)) / margin)
        if T > MAX_TRUNCATION:
            raise DomainOfConvergence(f"Growth margin {margin:.3g} needs a cut at t = {T:.3g}")
        return T
    # Faster than exponential decay: widen until the integrand is negligible.
    T = INITIAL_TRUNCATION
    for _ in range(MAX_DOUBLINGS):
        tail = max(float(np.linalg.norm(integrand(T))), float(np.linalg.norm(integrand(1.5 * T))))
        if tail <= 0.1 * tol:
            return 1.5 * T
        T *= 2.0
    raise QuadratureFailure(f"Integrand still of size {tail:.3g} at t = {T / 2:.3g}")


def integrate_half_line(integrand: Callable[[float], np.ndarray],
                        T: float,
                        breaks: list[float],
                        tol: float,
                        what: str,
                        ) -> np.ndarray:
    points = [b for b in breaks if 0.0 < b < T] or None
    try:
        value, error, info = quad_vec(integrand, 0.0, T, epsabs=0.1 * tol, epsrel=tol,
                                      limit=QUAD_LIMIT, points=points, full_output=True)
    except QuadratureFailure:
        raise
    except (ArithmeticError, ValueError, CdAnalysisError) as e:
        raise QuadratureFailure(f"{what}: {e}") from e
    if not info.success:
        raise QuadratureFailure(f"{what}: quadrature status {info.status} after {info.neval} evaluations, "
                                f"error estimate {error:.3g}")
    logger.debug(f"{what}: T = {T:.3g}, {info.neval} evaluations, error estimate {error:.3g}")
    return value


def _half_line(orig: Original,
               p: CdNumber,
               spec: TransformSpec,
               sign: int,
               margin: float,
               direction: CdNumber | None = None,
               ) -> CdNumber:
    if direction is not None and spec.kernel != "linear":
        raise ValueError("Kernel derivatives are available for the linear kernel only")
    integrand = half_line_integrand(orig, p, spec, sign, direction)
    T = _truncation(integrand, margin, orig.bound, spec.tol)
    breaks = [sign * d for d in orig.discontinuities]
    side = "t >= 0" if sign > 0 else "t < 0"
    value = integrate_half_line(integrand, T, breaks, spec.tol, what=f"'{orig.name}' on {side} at p = {p}")
    return CdNumber(value, spec.level)


def _check_margin(margin: float, p: CdNumber, s0: float, s1: float) -> None:
    if not margin > STRIP_MARGIN:
        raise DomainOfConvergence(f"Re p = {p.re} is not inside the strip ({s0}, {s1})")


def laplace(orig: Original, p: Any, spec: TransformSpec | None = None, direction: Any = None) -> CdNumber:
    """
    One-sided transform over t >= 0 (a two-sided original is cut at 0). direction, when given,
    returns the transform of the kernel's p-derivative along it instead.
    """
    spec = spec or TransformSpec()
    p = _argument(p, spec)
    if orig.support == "multiplicative":
        raise ValueError(f"'{orig.name}' is a Mellin original")
    margin = p.re - orig.s0
    _check_margin(margin, p, orig.s0, math.inf)
    h = None if direction is None else _argument(direction, spec)
    return _half_line(orig, p, spec, 1, margin, h)


def laplace_two_sided(orig: Original, p: Any, spec: TransformSpec | None = None, direction: Any = None) -> CdNumber:
    """Two one-sided integrals, using u(p, -t; q) = u(-p, t; q) for the left half."""
    spec = spec or TransformSpec()
    p = _argument(p, spec)
    if orig.support == "multiplicative":
        raise ValueError(f"'{orig.name}' is a Mellin original")
    s0, s1 = orig.strip
    if s1 <= s0:
        raise EmptyStrip(f"'{orig.name}' has s1 = {s1} <= s0 = {s0}")
    _check_margin(p.re - s0, p, s0, s1)
    _check_margin(s1 - p.re, p, s0, s1)
    h = None if direction is None else _argument(direction, spec)
    right = _half_line(orig, p, spec, 1, p.re - s0, h)
    if orig.support == "right":
        return right
    return right + _half_line(orig, p, spec, -1, s1 - p.re, h)


def mellin(orig: Original, p: Any, spec: TransformSpec | None = None, direction: Any = None) -> CdNumber:
    """int_0^inf g(tau) exp(-u(-p, ln tau; -q)) dtau / tau, i.e. int g(tau) tau^{p-1} dtau for q = 0."""
    spec = spec or TransformSpec()
    if orig.support != "multiplicative":
        raise ValueError(f"'{orig.name}' is not a Mellin original")
    s0, s1 = orig.strip
    if s1 <= s0:
        raise EmptyStrip(f"'{orig.name}' has s1 = {s1} <= s0 = {s0}")
    p = _argument(p, spec)
    h = None if direction is None else -_argument(direction, spec)
    return laplace_two_sided(orig.as_two_sided(), -p, spec.with_shift(-spec.q), h)


def transform(orig: Original, p: Any, spec: TransformSpec | None = None, direction: Any = None) -> CdNumber:
    """The transform matching the original's support."""
    match orig.support:
        case "right":
            return laplace(orig, p, spec, direction)
        case "two_sided":
            return laplace_two_sided(orig, p, spec, direction)
        case _:
            return mellin(orig, p, spec, direction)


def image(orig: Original, spec: TransformSpec | None = None) -> Callable[[Any], CdNumber]:
    def F(p: Any) -> CdNumber:
        return transform(orig, p, spec)

    F.__name__ = f"image of {orig.name or 'f'}"
    return F
