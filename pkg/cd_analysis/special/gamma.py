"""
Gamma and digamma from their product and partial-fraction expansions.

    1/Gamma(z) = z e^{C z} prod_{k>=1} (1 + z/k) e^{-z/k}
    psi(1 + z) = -C + sum_{k>=1} z / (k (k + z))

Both are cut after K >= 4|z| factors. What is left over is a power series in z whose
coefficients are Hurwitz zeta values zeta(m, K + 1); with |z| / (K + 1) <= 1/4 a fixed number
of its terms reaches machine precision.

All coefficients are real, so quaternion and octonion arguments are evaluated on their own
plane R + M R.
"""
from __future__ import annotations

import cmath
import math
from typing import Any


import numpy as np
from scipy import special


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import NonPositive, PoleAt
from cd_analysis.transcend.elementary import plane_apply
from config.config import EULER_GAMMA, GAMMA_MIN_FACTORS
from logger.logger import Logger
logger = Logger(logger_name=__name__)


TAIL_TERMS = 60
ASYMPTOTIC_FROM = 20.0
# psi(1 + x) - ln x = 1/(2x) - sum B_2k / (2k x^2k)
_GAP_COEFFICIENTS = (1.0 / 2.0, -1.0 / 12.0, 0.0, 1.0 / 120.0, 0.0, -1.0 / 252.0, 0.0,
                     1.0 / 240.0, 0.0, -1.0 / 132.0)


def _factor_count(w: complex) -> int:
    return max(GAMMA_MIN_FACTORS, int(math.ceil(4.0 * abs(w))))


def is_pole(w: complex) -> bool:
    """True at 0, -1, -2, ..."""
    return w.imag == 0.0 and w.real <= 0.0 and float(w.real).is_integer()


def _hurwitz_series(w: complex, K: int, shift: int, first: int, weights: np.ndarray | None = None) -> complex:
    """-sum_{m >= first} (-w)^m zeta(m + shift, K + 1) [/ weights]."""
    ms = np.arange(first, first + TAIL_TERMS)
    coefficients = special.zeta(ms + shift, K + 1.0)
    terms = np.power(complex(-w), ms) * coefficients
    if weights is not None:
        terms = terms / weights
    return complex(-np.sum(terms))


def reciprocal_gamma_complex(w: complex) -> complex:
    w = complex(w)
    if w == 0.0 or is_pole(w):
        return 0j
    K = _factor_count(w)
    ks = np.arange(1, K + 1, dtype=float)
    log_product = complex(np.sum(np.log(1.0 + w / ks))) - w * float(np.sum(1.0 / ks))
    ms = np.arange(2, 2 + TAIL_TERMS)
    tail = _hurwitz_series(w, K, shift=0, first=2, weights=ms.astype(float))
    return cmath.exp(cmath.log(w) + EULER_GAMMA * w + log_product + tail)


def gamma_complex(w: complex) -> complex:
    w = complex(w)
    if is_pole(w):
        raise PoleAt(f"Gamma has a pole at z = {w.real:g}")
    return 1.0 / reciprocal_gamma_complex(w)


def digamma_complex(w: complex) -> complex:
    """psi(1 + w)."""
    w = complex(w)
    if is_pole(1.0 + w):
        raise PoleAt(f"psi(1 + z) has a pole at z = {w.real:g}")
    if w == 0.0:
        return complex(-EULER_GAMMA)
    K = _factor_count(w)
    ks = np.arange(1, K + 1, dtype=float)
    partial = w * complex(np.sum(1.0 / (ks * (ks + w))))
    return -EULER_GAMMA + partial + _hurwitz_series(w, K, shift=1, first=1)


def digamma_log_gap(tau: float) -> float:
    """
    psi(1 + tau) - ln tau for tau > 0. From tau = 20 on, the asymptotic series avoids the
    cancellation between two nearly equal logarithms.
    """
    if tau <= 0.0:
        raise NonPositive(f"psi(1 + tau) - ln tau needs tau > 0, got {tau}")
    if tau < ASYMPTOTIC_FROM:
        return digamma_complex(tau).real - math.log(tau)
    inverse = 1.0 / tau
    return inverse * float(np.polyval(_GAP_COEFFICIENTS[::-1], inverse))


def _plane(z: Any) -> complex:
    z = CdNumber.coerce(z)
    return complex(z.re, float(np.linalg.norm(z.coeffs[1:])))


def gamma_reciprocal(z: Any) -> CdNumber:
    """1/Gamma(z), entire: 0 exactly at the poles of Gamma."""
    return plane_apply(reciprocal_gamma_complex, z)


def gamma(z: Any) -> CdNumber:
    if is_pole(_plane(z)):
        raise PoleAt(f"Gamma has a pole at z = {CdNumber.coerce(z).re:g}")
    return plane_apply(gamma_complex, z)


def digamma(z: Any) -> CdNumber:
    """psi(1 + z); digamma(0) = -C."""
    if is_pole(1.0 + _plane(z)):
        raise PoleAt(f"psi(1 + z) has a pole at z = {CdNumber.coerce(z).re:g}")
    return plane_apply(digamma_complex, z)
