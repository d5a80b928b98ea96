"""
The theta series psi(x) = sum_{n>=1} exp(-n^2 pi x) and the spherical-kernel transform
Omega^s built on it.

With f(t) = -exp(-|t|/2) + 2 exp(|t|/2) psi(exp(2|t|)) and the two-sided transforms

    g^s(p) = int f(t) exp(-E(t p)) dt
    w^s(p) = -int exp(-|t|/2) exp(-E(t p)) dt        (= 1/(p^2 - 1/4) on C)

the quotient Omega^s(p) = g^s(p) (2 w^s(p))^{-1} equals xi(p + 1/2) on the complex slice.
"""
from __future__ import annotations

import math
from typing import Any


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import NonPositive
from cd_analysis.xform.Original import Original
from cd_analysis.xform.TransformSpec import TransformSpec
from cd_analysis.xform.transforms import laplace_two_sided
from config.config import THETA_STOP
from logger.logger import Logger
logger = Logger(logger_name=__name__)


def theta_psi(x: float) -> float:
    if x <= 0.0:
        raise NonPositive(f"psi(x) needs x > 0, got {x}")
    total = 0.0
    n = 1
    while True:
        term = math.exp(-math.pi * n * n * x)
        total += term
        if term < THETA_STOP:
            return total
        n += 1


def _theta_func(t: float) -> float:
    a = abs(t)
    return -math.exp(-0.5 * a) + 2.0 * math.exp(0.5 * a) * theta_psi(math.exp(2.0 * a))


THETA_ORIGINAL = Original(func=_theta_func, s0=-0.5, s1=0.5, support="two_sided", bound=1.1,
                          name="-exp(-|t|/2) + 2 exp(|t|/2) psi(exp(2|t|))")
NORMALIZER_ORIGINAL = Original(func=lambda t: -math.exp(-0.5 * abs(t)), s0=-0.5, s1=0.5,
                               support="two_sided", name="-exp(-|t|/2)")


def theta_original() -> Original:
    return THETA_ORIGINAL


def _spherical(p: Any, tol: float | None) -> tuple[CdNumber, TransformSpec]:
    p = CdNumber.coerce(p)
    spec = TransformSpec(kernel="spherical", level=max(2, p.level))
    if tol is not None:
        spec = TransformSpec(kernel="spherical", level=spec.level, tol=tol)
    return p, spec


def g_s(p: Any, tol: float | None = None) -> CdNumber:
    p, spec = _spherical(p, tol)
    return laplace_two_sided(THETA_ORIGINAL, p, spec)


def w_s(p: Any, tol: float | None = None) -> CdNumber:
    p, spec = _spherical(p, tol)
    return laplace_two_sided(NORMALIZER_ORIGINAL, p, spec)


def omega_s(p: Any, tol: float | None = None) -> CdNumber:
    """g^s(p) (2 w^s(p))^{-1}; needs |Re p| < 1/2."""
    g = g_s(p, tol)
    w = w_s(p, tol)
    logger.debug(f"Omega^s at {p}: g^s = {g}, w^s = {w}")
    return g / (w * 2.0)
