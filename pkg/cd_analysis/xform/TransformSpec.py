"""
Kernel choice for the transforms: u(p, t; q) = p t + q (linear) or E(p t + q) (spherical).
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any


import numpy as np


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import LevelMismatch
from cd_analysis.rotor.RotationAutomorphism import RotationAutomorphism
from cd_analysis.transcend.iterated import E
from config.config import QUAD_TOL

KERNELS = ("linear", "spherical")


@dataclass(frozen=True)
class TransformSpec:
    """
    Attributes:
        kernel: "linear" or "spherical".
        level: algebra level b of the images.
        q: shift parameter.
        basis: automorphism sending i_j to the generators N_j; None means the standard basis.
            The spherical kernel reads p t + q in N-coordinates, u_N = T(E(T^{-1}(p t + q))).
        tol: quadrature tolerance.
    """
    kernel: str = "linear"
    level: int = 2
    q: Any = 0.0
    basis: RotationAutomorphism | None = field(default=None, compare=False)
    tol: float = QUAD_TOL

    def __post_init__(self):
        if self.kernel not in KERNELS:
            raise ValueError(f"Unknown kernel '{self.kernel}', expected one of {KERNELS}")
        if not 1 <= self.level <= 3:
            raise ValueError(f"Transforms run on levels 1..3, got {self.level}")
        if self.kernel == "spherical" and self.level not in (2, 3):
            raise ValueError("The spherical kernel needs level 2 or 3")
        if self.basis is not None and self.basis.level != self.level:
            raise LevelMismatch(f"Basis of level {self.basis.level} for transforms of level {self.level}")
        q = CdNumber.coerce(self.q)
        if q.level > self.level:
            raise LevelMismatch(f"Shift {q} does not fit level {self.level}")
        object.__setattr__(self, "q", q.embed(self.level))

    def exponent(self, p: CdNumber, t: float) -> CdNumber:
        w = p * t + self.q
        if self.kernel == "linear":
            return w
        if self.basis is None:
            return E(w, self.level)
        return self.basis.apply(E(self.basis.inverse().apply(w), self.level))

    def generator(self, j: int) -> CdNumber:
        """N_j."""
        i_j = CdNumber.basis(j, self.level)
        return i_j if self.basis is None else self.basis.apply(i_j)

    def conjugate_argument(self, p: Any) -> CdNumber:
        """
        The argument at which a real original's image takes the value conj F(p):
        conj p for the linear kernel, p0 - p1 i1 + p2 i2 + ... for the spherical one.
        """
        p = CdNumber.coerce(p, self.level)
        if self.kernel == "linear":
            return p.conj()
        return flip_first(p)

    def with_shift(self, q: Any) -> TransformSpec:
        return replace(self, q=q)

    def to_json(self) -> dict:
        return {
            "kernel": self.kernel,
            "level": self.level,
            "q": self.q.to_json(),
            "basis": None if self.basis is None else self.basis.to_json(),
            "tol": self.tol,
        }


def flip_first(p: Any) -> CdNumber:
    """p0 - p1 i1 + p2 i2 + ... + p_{2^b-1} i_{2^b-1}."""
    p = CdNumber.coerce(p)
    c = np.array(p.coeffs)
    if len(c) > 1:
        c[1] = -c[1]
    return CdNumber(c, p.level)
