"""
Free-function interface to the Cayley-Dickson arithmetic, plus the closed-form conjugation and
projection formulas that rebuild z* and the coordinates of z from generator products alone.
"""
from __future__ import annotations

from typing import Any


import numpy as np


from .CdNumber import CdNumber
from config.config import REL_TOL, ABS_TOL


def mul(a: Any, b: Any) -> CdNumber:
    return CdNumber.coerce(a) * b


def conj(z: Any) -> CdNumber:
    return CdNumber.coerce(z).conj()


def norm(z: Any) -> float:
    return CdNumber.coerce(z).norm()


def re(z: Any) -> float:
    return CdNumber.coerce(z).re


def im(z: Any) -> CdNumber:
    return CdNumber.coerce(z).im


def inverse(z: Any) -> CdNumber:
    return CdNumber.coerce(z).inverse()


def proj(z: Any, j: int) -> float:
    return CdNumber.coerce(z).proj(j)


def embed(z: Any, target_level: int) -> CdNumber:
    return CdNumber.coerce(z).embed(target_level)


def associator(a: Any, b: Any, c: Any) -> CdNumber:
    """(ab)c - a(bc); zero for quaternions, zero on repeated arguments for octonions."""
    a, b, c = (CdNumber.coerce(x) for x in (a, b, c))
    return (a * b) * c - a * (b * c)


def conj_formula(z: Any) -> CdNumber:
    """
    z* = (2^b - 2)^{-1} { -z + sum_{k=1}^{2^b-1} i_k (z i_k*) }

    Every product is taken with the generator table. Only meaningful for b >= 2: at b = 1 the
    prefactor divides by zero.
    """
    z = CdNumber.coerce(z)
    if z.level < 2:
        raise ValueError(f"The closed conjugation formula needs level >= 2, got {z.level}")
    total = -z
    for k in range(1, z.dim):
        i_k = CdNumber.basis(k, z.level)
        total = total + i_k * (z * i_k.conj())
    return total / (z.dim - 2)


def proj_formula(z: Any, j: int) -> float:
    """
    Coordinate j of z rebuilt from generator products:
        pi_0(z) = (z + z*)/2
        pi_j(z) = (-z i_j + i_j z*)/2,  j >= 1
    with z* from conj_formula.
    """
    z = CdNumber.coerce(z)
    if z.level < 2:
        raise ValueError(f"The closed projection formula needs level >= 2, got {z.level}")
    z_star = conj_formula(z)
    if j == 0:
        return ((z + z_star) / 2).re
    i_j = CdNumber.basis(j, z.level)
    return ((-(z * i_j) + i_j * z_star) / 2).re


def close(a: Any, b: Any, rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL) -> bool:
    """Componentwise-norm comparison |a - b| <= max(rel_tol * max(|a|, |b|), abs_tol)."""
    a, b = CdNumber.coerce(a), CdNumber.coerce(b)
    scale = max(a.norm(), b.norm())
    return (a - b).norm() <= max(rel_tol * scale, abs_tol)


def random_cd(rng: np.random.Generator, level: int, scale: float = 1.0) -> CdNumber:
    """Standard-normal coefficients, used by probes and tests."""
    return CdNumber(rng.normal(scale=scale, size=2 ** level), level)
