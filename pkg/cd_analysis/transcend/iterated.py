"""
Iterated exponentials and their inverses.

exp_n / ln_n:
    Exp_1(a_1; z) = exp(a_1 z)
    Exp_n(a_1, ..., a_n; z) = Exp_{n-1}(a_1, ..., a_{n-1}; exp(a_n z))
    ln_n peels the layers from the outside in, so ln_n(a; exp_n(a; z)) = z on principal strips.

E (nested spherical exponential):
    quaternions  E(p) = p0 + p1 i1 exp(-p2 i3 exp(-p3 i1))
    octonions    E(p) = p0 + p1 i1 exp(-p2 i3 exp(-p3 i1 exp(-p4 i7 exp(p5 i1 exp(-p6 i3 exp(-p7 i1))))))
E is the identity on C. Its inverse reads the angles back layer by layer with two-argument
arctangents.
"""
from __future__ import annotations

import math
from typing import Any, Sequence


import numpy as np


from .elementary import exp, ln
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import DegenerateAngles, ZeroArgument
from config.config import DEGENERATE_SINE_EPS, ZERO_EPSILON


# (sign, generator index) for the layers p_2, p_3, ...; the outer factor is always p1 * i1.
E_LAYERS: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((-1, 3), (-1, 1)),
    3: ((-1, 3), (-1, 1), (-1, 7), (1, 1), (-1, 3), (-1, 1)),
}


def exp_n(a: Sequence[Any], z: Any) -> CdNumber:
    if not a:
        raise ValueError("exp_n needs at least one coefficient")
    w = CdNumber.coerce(z)
    for a_k in reversed(a):
        a_k = CdNumber.coerce(a_k)
        if a_k.norm() <= ZERO_EPSILON:
            raise ZeroArgument("Iterated exponential coefficients must be nonzero")
        w = exp(a_k * w)
    return w


def ln_n(a: Sequence[Any], z: Any, branches: Sequence[int] | None = None) -> CdNumber:
    """
    Inverse of exp_n: w <- a_k^{-1} ln(w, n_k) for k = 1..n.
    branches defaults to all zeros (Ln(1) = 0).
    """
    if not a:
        raise ValueError("ln_n needs at least one coefficient")
    branches = list(branches) if branches is not None else [0] * len(a)
    if len(branches) != len(a):
        raise ValueError(f"{len(a)} coefficients but {len(branches)} branch indices")
    w = CdNumber.coerce(z)
    for a_k, n_k in zip(a, branches):
        a_k = CdNumber.coerce(a_k)
        if a_k.norm() <= ZERO_EPSILON:
            raise ZeroArgument("Iterated logarithm coefficients must be nonzero")
        w = a_k.inverse() * ln(w, n_k)
    return w


def _e_level(p: CdNumber, level: int | None) -> int:
    level = level if level is not None else max(p.level, 2)
    if level not in E_LAYERS:
        raise ValueError(f"E is defined for levels 2 and 3, got {level}")
    if p.level > level:
        raise ValueError(f"Argument of level {p.level} does not fit E at level {level}")
    return level


def E(p: Any, level: int | None = None) -> CdNumber:
    p = CdNumber.coerce(p)
    level = _e_level(p, level)
    p = p.embed(level)
    layers = E_LAYERS[level]

    e = CdNumber.real(1.0, level)
    for k in range(len(layers) + 1, 1, -1):
        sign, g = layers[k - 2]
        e = exp(CdNumber.basis(g, level) * e * (sign * p.coeffs[k]))
    return CdNumber.basis(1, level) * e * p.coeffs[1] + p.coeffs[0]


def E_inv(z: Any, branch: int = 0, level: int | None = None) -> CdNumber:
    """
    Preimage of z under E on the principal domain p1 >= 0, p_k in [0, pi] for the middle
    layers and the last angle in (-pi, pi] shifted by 2 pi * branch.

    Elements of C are their own preimage. DegenerateAngles is raised when a middle sine
    vanishes and the remaining directions are undetermined.
    """
    z = CdNumber.coerce(z)
    level = _e_level(z, level)
    z = z.embed(level)
    if not np.any(z.coeffs[2:]):
        return z
    layers = E_LAYERS[level]
    i1 = CdNumber.basis(1, level)

    p = np.zeros(2 ** level)
    p[0] = z.re
    p[1] = float(np.linalg.norm(z.coeffs[1:]))
    e = -(i1 * (z.im / p[1]))

    for k in range(2, len(layers) + 2):
        sign, g = layers[k - 2]
        im_norm = float(np.linalg.norm(e.coeffs[1:]))
        if k == len(layers) + 1:
            p[k] = math.atan2(sign * e.coeffs[g], e.re) + 2.0 * math.pi * branch
            break
        p[k] = math.atan2(im_norm, e.re)
        if im_norm < DEGENERATE_SINE_EPS:
            raise DegenerateAngles(f"sin(p{k}) vanished; directions of the inner layers are undetermined")
        v = e.im / (sign * im_norm)
        e = -(CdNumber.basis(g, level) * v)
    return CdNumber(p, level)
