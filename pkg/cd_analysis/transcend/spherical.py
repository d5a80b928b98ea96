"""
Hyperspherical coordinates of a nonzero element of C, H or O.

    z = radius * (cos(theta_1) + sin(theta_1) * M)
    M = i1 cos(theta_2) + i2 sin(theta_2) cos(theta_3) + ... + i_{n-1} sin(theta_2)...sin(theta_{n-1})

theta_1 lies in [0, 2 pi) and carries the sign of the last imaginary coordinate, so every
other angle stays in [0, pi].
"""
from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Any, Sequence


import numpy as np


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import ZeroArgument
from config.config import ZERO_EPSILON


@dataclass(frozen=True, slots=True)
class SphericalCoords:
    radius: float
    theta: tuple[float, ...]

    @property
    def level(self) -> int:
        return int(round(math.log2(len(self.theta) + 1)))

    def to_json(self) -> dict:
        return {"radius": self.radius, "theta": list(self.theta)}


def axis_from_angles(theta: Sequence[float]) -> CdNumber:
    """
    Unit imaginary axis from the full angle list (theta_1 is ignored); all zeros give i1.
    """
    theta = list(theta)
    n = len(theta) + 1
    if n not in (2, 4, 8):
        raise ValueError(f"Expected 1, 3 or 7 angles, got {len(theta)}")
    c = np.zeros(n)
    running = 1.0
    for k in range(1, n):
        if k < n - 1:
            c[k] = running * math.cos(theta[k])
            running *= math.sin(theta[k])
        else:
            c[k] = running
    return CdNumber(c)


def to_spherical(z: Any) -> SphericalCoords:
    z = CdNumber.coerce(z)
    if z.level == 0:
        z = z.embed(1)
    radius = z.norm()
    if radius <= ZERO_EPSILON:
        raise ZeroArgument("Spherical coordinates of zero are undefined")

    v = z.coeffs[1:]
    r = float(np.linalg.norm(v))
    theta_1 = math.atan2(r, z.re)
    if r == 0.0:
        u = np.zeros(len(v))
        u[0] = 1.0
    else:
        u = v / r
        if v[-1] < 0.0:
            theta_1 = 2.0 * math.pi - theta_1
            u = -u

    theta = [theta_1]
    for k in range(2, z.dim):
        theta.append(math.atan2(float(np.linalg.norm(u[k - 1:])), float(u[k - 2])))
    return SphericalCoords(radius=radius, theta=tuple(theta))


def from_spherical(coords: SphericalCoords) -> CdNumber:
    theta_1 = coords.theta[0]
    axis = axis_from_angles(coords.theta)
    return (axis * math.sin(theta_1) + math.cos(theta_1)) * coords.radius
