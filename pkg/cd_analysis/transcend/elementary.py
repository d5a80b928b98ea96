"""
Exponential, polar decomposition, branch-indexed logarithm and powers on CdNumber.

Every element z = x0 + v lies in the commutative plane R + M R with M = v/|v|, and on that
plane exp, ln and any real-coefficient function act exactly like their complex counterparts
under M <-> i. plane_apply exposes that identification for arbitrary complex functions.
"""
from __future__ import annotations

import cmath
import math
from typing import Any, Callable


import numpy as np


from .PolarForm import PolarForm
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import ZeroArgument
from config.config import IMAG_CUTOFF, ZERO_EPSILON


TWO_PI = 2.0 * math.pi


def exp(z: Any) -> CdNumber:
    """exp(x0 + v) = e^{x0} (cos|v| + v sin|v|/|v|), with sin(r)/r -> 1 as r -> 0."""
    z = CdNumber.coerce(z)
    r = float(np.linalg.norm(z.coeffs[1:]))
    scale = math.exp(z.re)
    c = z.coeffs * (scale * np.sinc(r / math.pi))
    c[0] = scale * math.cos(r)
    return CdNumber(c, z.level)


def exp_derivative(z: Any, h: Any) -> CdNumber:
    """
    Directional derivative of exp at z along h. With z = x0 + v, r = |v|, h = h0 + u:
        h0 exp(z) + e^{x0} [u s(r) + (v.u)(v g(r) - s(r))],
    s(r) = sin(r)/r, g(r) = (r cos r - sin r)/r^3 -> -1/3.
    """
    z, h = CdNumber.coerce(z), CdNumber.coerce(h)
    level = max(z.level, h.level)
    z, h = z.embed(level), h.embed(level)
    v, u = z.coeffs.copy(), h.coeffs.copy()
    v[0] = u[0] = 0.0
    r = float(np.linalg.norm(v))
    s = float(np.sinc(r / math.pi))
    g = -1.0 / 3.0 + r * r / 30.0 if r < 1e-4 else (r * math.cos(r) - math.sin(r)) / r ** 3
    dot = float(v @ u)
    out = u * s + v * (g * dot)
    out[0] = -s * dot
    return exp(z) * h.re + CdNumber(out * math.exp(z.re), level)


def axis_of(z: Any, reference: CdNumber | None = None) -> CdNumber:
    """
    Unit imaginary axis M of z. For numerically real z the axis of Im(reference) is used when
    that is nonzero, otherwise i1.
    """
    z = CdNumber.coerce(z)
    r = float(np.linalg.norm(z.coeffs[1:]))
    if r > IMAG_CUTOFF * max(z.norm(), ZERO_EPSILON):
        return z.im / r
    if reference is not None:
        reference = CdNumber.coerce(reference)
        rr = float(np.linalg.norm(reference.coeffs[1:]))
        if rr > 0.0:
            level = max(z.level, reference.level)
            return (reference.im / rr).embed(level)
    return CdNumber.basis(1, max(z.level, 1))


def polar(z: Any, branch: int = 0, reference: CdNumber | None = None) -> PolarForm:
    z = CdNumber.coerce(z)
    modulus = z.norm()
    if modulus <= ZERO_EPSILON:
        raise ZeroArgument("Polar form of zero is undefined")
    r = float(np.linalg.norm(z.coeffs[1:]))
    axis = axis_of(z, reference)
    if r <= IMAG_CUTOFF * modulus:
        angle = 0.0 if z.re > 0 else math.pi
    else:
        angle = math.atan2(r, z.re)
    return PolarForm(modulus=modulus, axis=axis, angle=angle, branch=int(branch))


def ln(z: Any, branch: int = 0) -> CdNumber:
    """ln(z, n) = ln|z| + M (phi + 2 pi n); exp(ln(z, n)) = z for every n."""
    z = CdNumber.coerce(z)
    p = polar(z, branch)
    if p.phase == 0.0:
        return CdNumber.real(math.log(p.modulus), z.level)
    return p.axis * p.phase + math.log(p.modulus)


def ln_nearest(z: Any, reference: Any) -> CdNumber:
    """
    The branch of ln(z) closest to reference. Used to lift logarithms continuously along a
    path: reference is the logarithm at the previous sample.
    """
    z = CdNumber.coerce(z)
    reference = CdNumber.coerce(reference)
    p = polar(z, reference=reference)
    along = float(reference.im.embed(max(reference.level, p.axis.level)).coeffs
                  @ p.axis.embed(max(reference.level, p.axis.level)).coeffs)
    n = round((along - p.angle) / TWO_PI)
    phase = p.angle + TWO_PI * n
    return p.axis * phase + math.log(p.modulus)


def power(z: Any, w: Any, branch: int = 0) -> CdNumber:
    """z^w := exp(w ln(z)), with w multiplied on the left."""
    z = CdNumber.coerce(z)
    if z.norm() <= ZERO_EPSILON:
        raise ZeroArgument("0 has no logarithm, so 0^w is undefined")
    return exp(CdNumber.coerce(w) * ln(z, branch))


def plane_apply(func: Callable[[complex], complex], z: Any, reference: CdNumber | None = None) -> CdNumber:
    """
    Evaluate a complex function on the plane R + M R containing z, M = axis_of(z).

    For functions whose Taylor coefficients are real this is the value of their canonical
    extension to H and O.
    """
    z = CdNumber.coerce(z)
    r = float(np.linalg.norm(z.coeffs[1:]))
    value = complex(func(complex(z.re, r)))
    if r == 0.0 and value.imag == 0.0:
        return CdNumber.real(value.real, z.level)
    axis = axis_of(z, reference)
    return axis * value.imag + value.real


def sin(z: Any) -> CdNumber:
    return plane_apply(cmath.sin, z)


def cos(z: Any) -> CdNumber:
    return plane_apply(cmath.cos, z)
