"""
Argument variation along curves: continuous lifts of Ln_n(a, 1; f(gamma(t))).

With coefficients a = (a_1, ..., a_{n-1}) the curve is gamma(t) = center + radius Exp_{n-1}(a; xi(t))
for a parameter loop xi, so Ln_{n-1}(a; (gamma - center) / radius) = xi. The n-th argument
variation is the change of Ln(Ln_{n-1}(a; f)) along gamma, each of the n logarithms lifted
continuously. For f(z) = z on such a curve about 0 with radius 1 it is 2 pi M as long as every
stage of the lift starts on its principal branch.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence


from .Path import Path
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import BranchFailure, EvaluationFailure, UnwrapAmbiguity, ZeroOnPath
from cd_analysis.qcx.ExtensionSpec import ExtensionSpec
from cd_analysis.qcx.extension import extension_callable
from cd_analysis.transcend.elementary import TWO_PI, exp, ln, ln_nearest
from cd_analysis.transcend.iterated import exp_n
from config.config import ABS_TOL, UNWRAP_THRESHOLD
from logger.logger import Logger
logger = Logger(logger_name=__name__)


ARG_SAMPLES = 1024


def iterated_curve(path: Path, a: Sequence[Any] = (), center: Any = 0.0, radius: float = 1.0) -> Path:
    """center + radius * Exp_{n-1}(a; path(t)); the path itself when a is empty."""
    if not a:
        return path
    a = [CdNumber.coerce(a_k) for a_k in a]
    center = CdNumber.coerce(center)
    return Path(func=lambda t: center + exp_n(a, path(t)) * radius, closed=path.closed,
                initial_samples=path.initial_samples, max_samples=path.max_samples,
                name=f"Exp_{len(a)}({path.name})")


def _lift(f: Callable, curve: Path, a: Sequence[CdNumber], m: int) -> tuple[list[CdNumber], float]:
    """
    Continuous Ln_n(a, 1; f) at m + 1 samples of curve. Every stage takes the branch of ln
    nearest the same stage at the previous sample; stage k feeds a_k^{-1} ln into stage k + 1.
    """
    inverses = [a_k.inverse() for a_k in a]
    lifted: list[CdNumber] = []
    stages: list[CdNumber] | None = None
    largest_jump = 0.0
    for k in range(m + 1):
        z = curve(k / m)
        try:
            w = CdNumber.coerce(f(z))
        except (ArithmeticError, ValueError) as e:
            raise EvaluationFailure(f"f failed at {z}: {e}") from e
        if w.norm() <= ABS_TOL:
            raise ZeroOnPath(f"|f| = {w.norm():.3e} at {z}")
        current = []
        for s in range(len(inverses) + 1):
            if s and w.norm() <= ABS_TOL:
                raise BranchFailure(f"Intermediate logarithm hit zero at stage {s + 1}, z = {z}")
            value = ln(w) if stages is None else ln_nearest(w, stages[s])
            if stages is not None:
                largest_jump = max(largest_jump, (value - stages[s]).im.norm())
            current.append(value)
            w = inverses[s] * value if s < len(inverses) else value
        stages = current
        lifted.append(w)
    return lifted, largest_jump


def _increment(f: Callable, curve: Path, a: Sequence[CdNumber], samples: int) -> CdNumber:
    m = samples
    for attempt in range(2):
        lifted, jump = _lift(f, curve, a, m)
        if jump <= UNWRAP_THRESHOLD:
            return lifted[-1] - lifted[0]
        logger.debug(f"Unwrap jump {jump:.3f} with {m} samples on '{curve.name}', refining")
        m *= 2
    raise UnwrapAmbiguity(f"Consecutive samples on '{curve.name}' still jump by {jump:.3f} with {m // 2} samples")


def delta_arg_n(f: Callable,
                path: Path,
                a: Sequence[Any] = (),
                center: Any = 0.0,
                radius: float = 1.0,
                samples: int = ARG_SAMPLES,
                ) -> CdNumber:
    """
    Change of the continuously lifted Ln_n(a, 1; f) = Ln(Ln_{n-1}(a; f)) along the curve. For
    n = 1 (a empty) the curve is path itself; otherwise path is the parameter loop xi of
    iterated_curve and every intermediate logarithm is lifted on its own.
    A step whose imaginary jump exceeds pi at any stage triggers one doubling of the samples,
    then UnwrapAmbiguity.
    """
    a = [CdNumber.coerce(a_k) for a_k in a]
    return _increment(f, iterated_curve(path, a, center, radius), a, samples)


def winding_number(path: Path, z0: Any) -> int:
    """Winding number of a closed loop on the complex slice around z0: Delta Arg_1 / (2 pi i1)."""
    z0 = CdNumber.coerce(z0)
    if z0.min_level() > 1 or any(path(t).min_level() > 1 for t in (0.0, 0.25, 0.5, 0.75)):
        raise ValueError("winding_number works on the complex slice")
    if not path.closed:
        raise ValueError(f"Path '{path.name}' is not closed")
    z0 = z0.embed(max(z0.level, 1))
    delta = delta_arg_n(lambda z: z - z0, path)
    return int(round(delta.embed(max(delta.level, 1)).proj(1) / TWO_PI))


@dataclass(frozen=True)
class ArgRatio:
    """Delta_gamma Arg_n f = p K Delta_omega Arg_1 f with |K| = 1 (K = 0 when p = 0)."""
    p: Fraction
    p_value: float
    K: CdNumber
    delta_gamma: CdNumber
    delta_omega: CdNumber

    def to_json(self) -> dict:
        return {
            "p": str(self.p),
            "p_value": self.p_value,
            "K": self.K.to_json(),
            "delta_gamma": self.delta_gamma.to_json(),
            "delta_omega": self.delta_omega.to_json(),
        }


def surface_loop(z0: CdNumber,
                 rho_plus: float,
                 rho_minus: float,
                 a: Sequence[CdNumber],
                 M: CdNumber,
                 ) -> Path:
    """
    Outer loop gamma_+(t) = Re z0 + rho_+ Exp_{n-1}(a; xi(t)), the joining ray psi, the inner loop
    gamma_-(t) = Re z0 + rho_- Exp_{n-1}(a; xi(1 - t)) and psi back, with xi(t) = exp(2 pi M t),
    traversed over parameter shares 1/3, 1/6, 1/3, 1/6.
    """
    xi = Path(func=lambda t: exp(M * (TWO_PI * t)), closed=True, name="xi")
    base = CdNumber.real(z0.re, M.level)
    outer = iterated_curve(xi, a, base, rho_plus) if a else Path(
        func=lambda t: base + xi(t) * rho_plus, closed=True, name="gamma+")
    inner_xi = xi.reversed()
    inner = iterated_curve(inner_xi, a, base, rho_minus) if a else Path(
        func=lambda t: base + inner_xi(t) * rho_minus, closed=True, name="gamma-")
    psi = Path.segment(outer.end, inner.start, name="psi")
    return Path.concat(outer, psi, inner, psi.reversed(), weights=(2, 1, 2, 1), name="surface loop")


def surface_arg_ratio(spec: ExtensionSpec,
                      z0: Any,
                      rho_plus: float,
                      rho_minus: float,
                      n: int = 1,
                      a: Sequence[Any] = (),
                      M: Any = None,
                      omega_radius: float | None = None,
                      ) -> ArgRatio:
    """
    Compare the argument variation of the extension of spec around the surface S_{z0} with the
    variation around the complex zero or pole z0 itself.

    rho_minus < |Im z0| < rho_plus. M defaults to i2, a direction orthogonal to C; a holds the
    n - 1 iterated-exponential coefficients of the loops. For n >= 2 the variation along gamma is
    the staged Ln_n(a, 1; f), which need not be a multiple of the one around z0; p is then its nearest
    fraction with denominator at most 12.
    """
    z0 = CdNumber.coerce(z0)
    if z0.min_level() > 1:
        raise ValueError(f"z0 must be a point of the complex slice, got {z0}")
    height = abs(z0.embed(max(z0.level, 1)).proj(1))
    if not 0.0 < rho_minus < height < rho_plus:
        raise ValueError(f"Need 0 < rho_minus < |Im z0| < rho_plus, got {rho_minus}, {height}, {rho_plus}")
    if len(a) != n - 1:
        raise ValueError(f"n = {n} needs {n - 1} coefficients, got {len(a)}")
    level = spec.level
    M = CdNumber.basis(2, level) if M is None else CdNumber.coerce(M, level)
    a = [CdNumber.coerce(a_k, level) for a_k in a]
    f = extension_callable(spec)

    gamma = surface_loop(z0.embed(level), rho_plus, rho_minus, a, M)
    delta_gamma = _increment(f, gamma, a, ARG_SAMPLES)

    epsilon = omega_radius or 0.5 * min(height, rho_plus - height, height - rho_minus)
    omega = Path.circle(z0.embed(level), epsilon, CdNumber.basis(1, level), name="omega")
    delta_omega = delta_arg_n(f, omega)
    if delta_omega.im.norm() < 1.0:
        raise ValueError(f"{z0} is neither a zero nor a pole of '{spec.name or spec.kind}'")

    p_value = delta_gamma.norm() / delta_omega.norm()
    p = Fraction(p_value).limit_denominator(12)
    if p == 0:
        K = CdNumber.real(0.0, level)
    else:
        K = (delta_gamma / delta_omega) / p_value
    logger.debug(f"Surface ratio at {z0}: p = {p} ({p_value:.6f}), K = {K}")
    return ArgRatio(p=p, p_value=p_value, K=K, delta_gamma=delta_gamma, delta_omega=delta_omega)
