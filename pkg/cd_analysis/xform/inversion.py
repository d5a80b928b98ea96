"""
Bromwich-line inversion.

Along p(tau) = a + S tau the kernel exp(p t + q0) equals e^{a t + q0} (cos tau t + S sin tau t),
so with G(tau) = F(a + S tau) the principal-value integral folds onto tau >= 0:

    f(t) = e^{a t + q0} / (2 pi) int_0^inf [(G(tau) + G(-tau)) cos(tau t) + ((G(tau) - G(-tau)) S) sin(tau t)] dtau

The factors S of dp and of the prefactor meet on the right and cancel, which keeps the
formula valid for originals with values anywhere in the algebra. Each coefficient is
integrated with oscillatory weights: [0, B], then octaves [B, 2B], ... until one octave
contributes less than tol / 10, with an infinite-range Fourier tail tried once the octaves
decay slowly.
"""
from __future__ import annotations

import functools
import math
from typing import Any, Callable, Sequence


import numpy as np
from scipy.integrate import quad


from .BromwichLine import BromwichLine
from .TransformSpec import TransformSpec
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import CdAnalysisError, EvaluationFailure, OutOfDomain, TruncationTooSmall
from config.config import MAX_DOUBLINGS, QUAD_LIMIT
from logger.logger import Logger
logger = Logger(logger_name=__name__)


INVERSION_TOL = 1e-8
TAIL_AFTER = 2


def _line_parts(F: Callable[[CdNumber], Any], line: BromwichLine, level: int) -> Callable[[float], tuple]:
    """tau -> (G(tau) + G(-tau), (G(tau) - G(-tau)) S) as coefficient arrays, cached."""
    S = line.S.embed(level)

    @functools.lru_cache(maxsize=None)
    def G(tau: float) -> CdNumber:
        p = line.point(tau).embed(level)
        try:
            return CdNumber.coerce(F(p)).embed(level)
        except (ArithmeticError, ValueError, CdAnalysisError) as e:
            raise EvaluationFailure(f"Image failed at p = {p}: {e}") from e

    @functools.lru_cache(maxsize=None)
    def parts(tau: float) -> tuple[np.ndarray, np.ndarray]:
        plus, minus = G(tau), G(-tau)
        return (plus + minus).coeffs, ((plus - minus) * S).coeffs

    return parts


def _weighted(g: Callable[[float], float], lo: float, hi: float, weight: str, omega: float, tol: float) -> tuple[float, bool]:
    """int_lo^hi g(tau) w(omega tau) dtau for w in (cos, sin); hi may be inf. Returns (value, ok)."""
    if omega == 0.0:
        if weight == "sin":
            return 0.0, True
        out = quad(g, lo, hi, epsabs=0.1 * tol, epsrel=tol, limit=QUAD_LIMIT, full_output=1)
    else:
        out = quad(g, lo, hi, weight=weight, wvar=omega, epsabs=0.1 * tol, epsrel=tol,
                   limit=QUAD_LIMIT, full_output=1)
    return float(out[0]), len(out) < 4


def _interval(parts: Callable[[float], tuple], lo: float, hi: float, t: float, dim: int, tol: float) -> tuple[np.ndarray, bool]:
    omega = abs(t)
    sign = 1.0 if t >= 0.0 else -1.0
    total = np.zeros(dim)
    ok = True
    for k in range(dim):
        c, c_ok = _weighted(lambda tau, k=k: parts(tau)[0][k], lo, hi, "cos", omega, tol)
        s, s_ok = _weighted(lambda tau, k=k: parts(tau)[1][k], lo, hi, "sin", omega, tol)
        total[k] = c + sign * s
        ok = ok and c_ok and s_ok
    return total, ok


def _invert_one(F: Callable[[CdNumber], Any], t: float, line: BromwichLine, spec: TransformSpec, tol: float) -> CdNumber:
    level, dim = spec.level, 2 ** spec.level
    parts = _line_parts(F, line, level)
    B = line.truncation
    total, ok = _interval(parts, 0.0, B, t, dim, tol)
    if not ok:
        logger.info(f"Inversion at t = {t}: quadrature on [0, {B:.4g}] reported a tolerance warning")
    for doubling in range(MAX_DOUBLINGS):
        piece, _ = _interval(parts, B, 2.0 * B, t, dim, tol)
        total = total + piece
        B *= 2.0
        change = float(np.linalg.norm(piece))
        logger.debug(f"Inversion at t = {t}: octave up to {B:.4g} adds {change:.3e}")
        if change < 0.1 * tol * max(1.0, float(np.linalg.norm(total))):
            break
        if doubling + 1 == TAIL_AFTER:
            tail, ok = _interval(parts, B, math.inf, t, dim, tol)
            if ok:
                logger.debug(f"Inversion at t = {t}: Fourier tail from {B:.4g} adds {np.linalg.norm(tail):.3e}")
                total = total + tail
                break
            logger.info(f"Fourier tail from {B:.4g} did not converge at t = {t}, doubling on")
    else:
        raise TruncationTooSmall(f"Octave contributions at t = {t} still exceed {0.1 * tol:.1e} at B = {B:.4g}")
    scale = math.exp(line.a * t + spec.q.re) / (2.0 * math.pi)
    return CdNumber(total * scale, level)


def _check_line(line: BromwichLine, spec: TransformSpec) -> None:
    if spec.q.im.norm() > 0.0:
        raise ValueError(f"Inversion needs a real shift q, got {spec.q}")
    if line.S.level > spec.level:
        raise OutOfDomain(f"Line direction {line.S} does not fit level {spec.level}")
    if spec.kernel == "spherical":
        N1 = spec.generator(1)
        alignment = (line.S.embed(spec.level) * N1.conj()).re
        if abs(abs(alignment) - 1.0) > 1e-9:
            raise ValueError(f"Spherical-kernel inversion runs along S = +-N1; Re(S conj N1) = {alignment:.3g}")


def invert(F: Callable[[CdNumber], Any] | Sequence[Callable[[CdNumber], Any]],
           t: float,
           line: BromwichLine,
           spec: TransformSpec | None = None,
           tol: float = INVERSION_TOL,
           strip: tuple[float, float] | None = None,
           ) -> CdNumber:
    """
    Original value f(t) of the image F along line. F may also be the list of component images
    F_j of real originals f_j, reassembled as sum_j f_j(t) N_j.

    At a jump of the original the result is the mean of the one-sided limits.
    """
    spec = spec or TransformSpec()
    _check_line(line, spec)
    if strip is not None:
        line.check_strip(*strip)
    t = float(t)
    if callable(F):
        return _invert_one(F, t, line, spec, tol)
    if len(F) != 2 ** spec.level:
        raise ValueError(f"Need {2 ** spec.level} component images, got {len(F)}")
    total = CdNumber.real(0.0, spec.level)
    for j, F_j in enumerate(F):
        total = total + _invert_one(F_j, t, line, spec, tol) * spec.generator(j)
    return total


def invert_mellin(G: Callable[[CdNumber], Any] | Sequence[Callable[[CdNumber], Any]],
                  tau: float,
                  line: BromwichLine,
                  spec: TransformSpec | None = None,
                  tol: float = INVERSION_TOL,
                  strip: tuple[float, float] | None = None,
                  ) -> CdNumber:
    """
    g(tau) from its Mellin image: the Laplace inversion of p -> G(-p) at t = ln tau along the
    mirrored line -a + S theta, with shift -q.
    """
    spec = spec or TransformSpec()
    if tau <= 0.0:
        raise OutOfDomain(f"Mellin originals live on tau > 0, got {tau}")
    if strip is not None:
        line.check_strip(*strip)

    def mirrored(image: Callable[[CdNumber], Any]) -> Callable[[CdNumber], Any]:
        return lambda p: image(-p)

    flipped = mirrored(G) if callable(G) else [mirrored(G_j) for G_j in G]
    return invert(flipped, math.log(tau), line.mirrored(), spec.with_shift(-spec.q), tol)
