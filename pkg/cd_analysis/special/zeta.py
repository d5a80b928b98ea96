"""
The Riemann zeta function in five representations, the reflection factor chi and the bare
Hankel integral J.

    euler_maclaurin  zeta(z) = z/(z-1) - 1/2 + z int_1^inf ([x] - x + 1/2) x^{-z-1} dx      Re z > -1
    strip            zeta(z) = z int_0^inf ([x] - x + 1/2) x^{-z-1} dx                     -1 < Re z < 0
    reflected        zeta(z) = chi(z) zeta(1 - z)                                          Re z < 0
    hankel           zeta(z) = Gamma(1 - z) exp(-i pi z) J(z) / (2 pi i)                   z != 1
    mellin_digamma   zeta(z) = -sin(pi z)/pi int_0^inf (psi(1 + tau) - ln tau) tau^{-z} dtau  0 < Re z < 1

The sawtooth integral is taken interval by interval. On [n, n + 1] the integrand is
(n + 1/2 - x) x^{-z-1}, whose antiderivative is elementary; summed over n the interval
values telescope into sum_{n<N} n^{-z} plus boundary terms at 1 and N. The remainder on
[N, inf) is the Euler-Maclaurin series in Bernoulli numbers, and its first omitted term
serves as the error bound.

Quaternion and octonion arguments are evaluated on their plane R + M R, or, with
via="rotation", at the complex partner and rotated back.
"""
from __future__ import annotations

import cmath
import math
from typing import Any, Callable


import numpy as np
from scipy import special


from .ZetaRep import ZetaRep
from .gamma import digamma_log_gap, gamma_complex
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.contour.Path import Path
from cd_analysis.contour.integral import line_integral
from cd_analysis.exceptions import DomainOfConvergence, DomainOfRepresentation, NoConvergence, PoleAtOne
from cd_analysis.rotor.rotation import build_rotation, find_partner
from cd_analysis.transcend.elementary import TWO_PI, plane_apply
from cd_analysis.xform.Original import Original
from cd_analysis.xform.TransformSpec import TransformSpec
from cd_analysis.xform.transforms import mellin
from logger.logger import Logger
logger = Logger(logger_name=__name__)


HANKEL_CUT = 50.0
MAX_TERM_DOUBLINGS = 8
VIAS = ("plane", "rotation")

# |g(tau)| <= C tau^{-s0} near 0 (g ~ -ln tau) and <= C / tau at infinity.
DIGAMMA_GAP = Original(func=digamma_log_gap, s0=1e-6, s1=1.0, support="multiplicative", bound=4e5,
                       name="psi(1+tau) - ln tau")


def _sawtooth_terms(w: complex, N: int, M: int) -> tuple[complex, float]:
    """(z int_1^inf ([x] - x + 1/2) x^{-z-1} dx, first omitted Bernoulli term)."""
    ns = np.arange(1, N, dtype=float)
    partial = complex(np.sum(np.exp(-w * np.log(ns))))
    log_N = math.log(N)
    N_w = cmath.exp(-w * log_N)
    head = 0.5 + partial - (N - 0.5) * N_w + w * complex(np.expm1((1.0 - w) * log_N)) / (w - 1.0)

    bernoulli = special.bernoulli(2 * M + 2)
    tail = 0j
    rising = w  # (z)_{2k-1}
    for k in range(1, M + 2):
        term = bernoulli[2 * k] / math.factorial(2 * k) * rising * N_w * float(N) ** (1 - 2 * k)
        if k == M + 1:
            return head + tail, abs(term)
        tail += term
        rising *= (w + 2 * k - 1) * (w + 2 * k)


def _sawtooth(w: complex, rep: ZetaRep) -> complex:
    N = rep.terms or 20 + int(math.ceil(abs(w)))
    for _ in range(MAX_TERM_DOUBLINGS):
        value, bound = _sawtooth_terms(w, N, rep.corrections)
        if bound <= rep.tol * max(1.0, abs(value)):
            logger.debug(f"Sawtooth integral at {w}: N = {N}, tail bound {bound:.2e}")
            return value
        N *= 2
    raise NoConvergence(f"Euler-Maclaurin tail at z = {w} still {bound:.2e} with N = {N // 2}")


def _euler_maclaurin(w: complex, rep: ZetaRep) -> complex:
    return w / (w - 1.0) - 0.5 + _sawtooth(w, rep)


def _strip(w: complex, rep: ZetaRep) -> complex:
    # [0, 1] exactly: int_0^1 (1/2 - x) x^{-z-1} dx = -1/(2z) + 1/(z - 1)
    return w * (-0.5 / w + 1.0 / (w - 1.0)) + _sawtooth(w, rep)


def chi_complex(w: complex) -> complex:
    """2^z pi^{z-1} sin(pi z / 2) Gamma(1 - z)."""
    return (cmath.exp(w * math.log(2.0) + (w - 1.0) * math.log(math.pi))
            * cmath.sin(math.pi * w / 2.0) * gamma_complex(1.0 - w))


def _reflected(w: complex, rep: ZetaRep) -> complex:
    mirror = ZetaRep("euler_maclaurin", terms=rep.terms, corrections=rep.corrections, tol=rep.tol)
    return chi_complex(w) * _euler_maclaurin(1.0 - w, mirror)


def hankel_J_complex(w: complex, rep: ZetaRep | None = None) -> complex:
    """
    J(z) = int_C eta^{z-1} / (e^eta - 1) d eta over the loop that comes in from +inf along
    arg eta = 0, circles 0 counterclockwise at radius R and leaves along arg eta = 2 pi.
    """
    rep = rep or ZetaRep("hankel")
    a = w - 1.0
    R = rep.hankel_radius
    T = HANKEL_CUT + 4.0 * max(0.0, w.real)

    def on_ray(eta: CdNumber) -> CdNumber:
        x = eta.re
        return CdNumber.from_complex(cmath.exp(a * math.log(x)) / math.expm1(x))

    def on_circle(eta: CdNumber) -> CdNumber:
        c = eta.to_complex()
        arg = cmath.phase(c) % TWO_PI
        return CdNumber.from_complex(cmath.exp(a * complex(math.log(abs(c)), arg)) / (cmath.exp(c) - 1.0))

    inbound = line_integral(on_ray, Path.segment(T, R, name="Hankel ray"), rep.tol).to_complex()
    around = line_integral(on_circle, Path.circle(0.0, R, CdNumber.basis(1, 1), name="Hankel circle"),
                           rep.tol).to_complex()
    # Outbound ray: the inbound values on the sheet arg = 2 pi, traversed the other way.
    return around + (1.0 - cmath.exp(TWO_PI * 1j * a)) * inbound


def _hankel(w: complex, rep: ZetaRep) -> complex:
    if w.imag == 0.0 and w.real >= 2.0 and float(w.real).is_integer():
        raise DomainOfRepresentation(f"Gamma(1 - z) J(z) is 0 * inf at z = {w.real:g}")
    return gamma_complex(1.0 - w) * cmath.exp(-1j * math.pi * w) * hankel_J_complex(w, rep) / (2j * math.pi)


def _mellin_digamma(w: complex, rep: ZetaRep) -> complex:
    try:
        transform = mellin(DIGAMMA_GAP, 1.0 - w, TransformSpec(level=1, tol=rep.tol)).to_complex()
    except DomainOfConvergence as e:
        raise DomainOfRepresentation(f"Mellin integral does not converge well enough at z = {w}: {e}") from e
    return -cmath.sin(math.pi * w) / math.pi * transform


_EVALUATORS: dict[str, Callable[[complex, ZetaRep], complex]] = {
    "euler_maclaurin": _euler_maclaurin,
    "strip": _strip,
    "reflected": _reflected,
    "hankel": _hankel,
    "mellin_digamma": _mellin_digamma,
}


def zeta_complex(w: complex, rep: ZetaRep | str | None = None) -> complex:
    w = complex(w)
    if w == 1.0:
        raise PoleAtOne("zeta has a pole at z = 1")
    rep = ZetaRep.coerce(rep, w.real)
    rep.check(w.real)
    return _EVALUATORS[rep.representation](w, rep)


def quasi_conformal(func: Callable[[complex], complex], z: Any, via: str = "plane") -> CdNumber:
    """
    Extend a complex function with real Taylor coefficients to z: on the plane of z, or by
    R_{z,y}(func(y)) with y the complex partner of z.
    """
    if via not in VIAS:
        raise ValueError(f"Unknown evaluation path '{via}', expected one of {VIAS}")
    z = CdNumber.coerce(z)
    if via == "plane" or z.min_level() <= 1:
        return plane_apply(func, z)
    y = find_partner(z)
    R = build_rotation(z, y, (1, z.level))
    return R.apply(CdNumber.from_complex(complex(func(y.to_complex())), z.level))


def zeta(z: Any, rep: ZetaRep | str | None = "auto", via: str = "plane") -> CdNumber:
    z = CdNumber.coerce(z)
    if z == CdNumber.real(1.0):
        raise PoleAtOne("zeta has a pole at z = 1")
    rep = ZetaRep.coerce(rep, z.re)
    rep.check(z.re)
    return quasi_conformal(lambda w: zeta_complex(w, rep), z, via)


def zeta_partial(z: Any, a: int, q: int) -> CdNumber:
    """sum_{n=a+1}^{q} n^{-z}."""
    if a < 0 or q < a:
        raise ValueError(f"Need 0 <= a <= q, got a = {a}, q = {q}")
    log_ns = np.log(np.arange(a + 1, q + 1, dtype=float))
    return plane_apply(lambda w: complex(np.sum(np.exp(-w * log_ns))), z)


def zeta_hankel_J(z: Any, rep: ZetaRep | None = None) -> CdNumber:
    return plane_apply(lambda w: hankel_J_complex(w, rep), z)


def chi(z: Any) -> CdNumber:
    return plane_apply(chi_complex, z)
