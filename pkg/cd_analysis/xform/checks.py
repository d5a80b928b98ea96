"""
Numerical checks on transform images: differentiation under the integral sign, the
conjugation and evenness identities of real originals, and equivariance under the rotation
family.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence


from .Original import Original
from .TransformSpec import TransformSpec, flip_first
from .transforms import image, transform
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import DomainOfConvergence
from cd_analysis.qcx.checks import directional_derivative
from cd_analysis.rotor.rotation import build_rotation, find_partner
from cd_analysis.transcend.iterated import E
from config.config import ZERO_EPSILON
from logger.logger import Logger
logger = Logger(logger_name=__name__)


DIFF_STEP = 1e-2


def diff_under_integral_check(orig: Original, p: Any, h: Any, spec: TransformSpec | None = None) -> float:
    """
    |D F(p).h - int f(t) (d/dp exp(-u(p, t; q))).h dt| for the linear kernel. The left side is
    a Richardson-extrapolated central difference, the right side a quadrature of the kernel
    derivative.
    """
    spec = spec or TransformSpec()
    if spec.kernel != "linear":
        raise ValueError("The derivative check is defined for the linear kernel")
    p = CdNumber.coerce(p, spec.level)
    h = CdNumber.coerce(h, spec.level)
    if h.norm() == 0.0:
        return 0.0
    delta = DIFF_STEP * max(1.0, p.norm()) / h.norm()
    F = image(orig, spec)
    coarse = directional_derivative(F, p, h, delta)
    fine = directional_derivative(F, p, h, delta / 2.0)
    difference = fine + (fine - coarse) / 3.0
    under = transform(orig, p, spec, direction=h)
    residual = (difference - under).norm()
    logger.debug(f"Derivative of '{orig.name}' at {p} along {h}: residual {residual:.3e}")
    return residual


@dataclass(frozen=True)
class SymmetryReport:
    """
    Largest residuals over the probes of
        conj_sym             F(c(p)) = conj F(p), c the conjugation of the kernel's chart
        even_sym             F(-p) = F(p)
        spherical_conj_sym   F(p0 - p1 i1 + p2 i2 + ...) = conj F(p)
        reciprocal_even_sym  1/F(-p) = 1/F(p)
    even_sym and reciprocal_even_sym are None when no -p could be evaluated.
    """
    conj_sym: float
    even_sym: float | None
    spherical_conj_sym: float
    reciprocal_even_sym: float | None
    probes: int

    def to_json(self) -> dict:
        return {
            "conj_sym": self.conj_sym,
            "even_sym": self.even_sym,
            "spherical_conj_sym": self.spherical_conj_sym,
            "reciprocal_even_sym": self.reciprocal_even_sym,
            "probes": self.probes,
        }


def symmetry_report(F: Callable[[CdNumber], Any], probes: Sequence[Any], spec: TransformSpec | None = None) -> SymmetryReport:
    spec = spec or TransformSpec()
    conj_sym = spherical = 0.0
    even: float | None = None
    reciprocal: float | None = None
    for p in probes:
        p = CdNumber.coerce(p, spec.level)
        value = CdNumber.coerce(F(p))
        target = value.conj()
        conj_sym = max(conj_sym, (CdNumber.coerce(F(spec.conjugate_argument(p))) - target).norm())
        spherical = max(spherical, (CdNumber.coerce(F(flip_first(p))) - target).norm())
        try:
            mirrored = CdNumber.coerce(F(-p))
        except DomainOfConvergence:
            logger.debug(f"-{p} lies outside the strip, evenness not probed there")
            continue
        even = max(even or 0.0, (mirrored - value).norm())
        if mirrored.norm() > ZERO_EPSILON and value.norm() > ZERO_EPSILON:
            reciprocal = max(reciprocal or 0.0, (mirrored.inverse() - value.inverse()).norm())
    return SymmetryReport(conj_sym=conj_sym, even_sym=even, spherical_conj_sym=spherical,
                          reciprocal_even_sym=reciprocal, probes=len(probes))


def quasi_regularity_check(orig: Original, spec: TransformSpec | None = None, probes: Sequence[Any] = ()) -> float:
    """
    max |F(z) - R(F(y))| over the probes, y the complex partner of z and R = R_{z,y}. For the
    spherical kernel the rotation is R_{E(z), y} with y the partner of E(z).
    Probes on the complex slice contribute 0.
    """
    spec = spec or TransformSpec()
    if spec.level < 2:
        return 0.0
    F = image(orig, spec)
    worst = 0.0
    for z in probes:
        z = CdNumber.coerce(z, spec.level)
        anchor = z if spec.kernel == "linear" else E(z, spec.level)
        if anchor.min_level() <= 1:
            continue
        y = find_partner(anchor)
        R = build_rotation(anchor, y, (1, spec.level))
        residual = (F(z) - R.apply(F(y))).norm()
        logger.debug(f"Equivariance of '{orig.name}' at {z}: {residual:.3e}")
        worst = max(worst, residual)
    return worst
