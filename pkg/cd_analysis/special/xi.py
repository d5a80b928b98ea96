"""
The completed zeta function xi(z) = z (z - 1) pi^{-z/2} Gamma(z/2) zeta(z) / 2 and its
centred form Upsilon(z) = xi(z + 1/2), which is even and real on the imaginary axis.
"""
from __future__ import annotations

import cmath
import math
from typing import Any


from .gamma import gamma_complex, is_pole
from .zeta import zeta_complex
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import PoleAt
from cd_analysis.transcend.elementary import plane_apply


def xi_complex(w: complex) -> complex:
    w = complex(w)
    if w in (0.0, 1.0):
        return 0.5 + 0j
    half = w / 2.0
    if is_pole(half):
        raise PoleAt(f"Gamma(z/2) has a pole at z = {w.real:g}")
    return w * (w - 1.0) * cmath.exp(-half * math.log(math.pi)) * gamma_complex(half) * zeta_complex(w) / 2.0


def upsilon_complex(w: complex) -> complex:
    return xi_complex(complex(w) + 0.5)


def xi(z: Any) -> CdNumber:
    return plane_apply(xi_complex, z)


def upsilon(z: Any) -> CdNumber:
    return plane_apply(upsilon_complex, z)
