"""
The rotation family R_{z,x}: for a point z of H or O and a partner x in the subalgebra A_r
with the same real part and the same |Im|, an automorphism T fixing R with T(x) = z.

T depends only on the imaginary axes of z and x, so it is unchanged by positive rescaling and
by shifts of the real parts.
"""
from __future__ import annotations

from typing import Any


import numpy as np


from .RotationAutomorphism import RotationAutomorphism
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import LevelMismatch, RePartMismatch
from cd_analysis.transcend.elementary import axis_of
from config.config import RE_PART_TOL


def _check_pair(pair: tuple[int, int]) -> tuple[int, int]:
    r, b = pair
    if not (1 <= r < b <= 3):
        raise LevelMismatch(f"Need 1 <= r < b <= 3, got (r, b) = {pair}")
    return r, b


def build_rotation(z: Any, x: Any, pair: tuple[int, int] = (1, 3)) -> RotationAutomorphism:
    """
    R_{z,x} for the (r, b) family.

    Identity when z already lies in A_r. Otherwise i1 is sent through the frame of x's axis
    onto the frame of z's axis, i.e. T = F(M_z) o F(M_x)^{-1}, which maps M_x to M_z.

    Both families use the same frames. For (2, 3) the octonion frame is completed by
    Gram-Schmidt over i2, i3, ... (RotationAutomorphism.frame), not by fixing the i1, i5, i7
    and i3, i4, i6 subspaces, so T is an automorphism carrying x to z but need not keep those
    subspaces in place.
    """
    r, b = _check_pair(pair)
    z, x = CdNumber.coerce(z), CdNumber.coerce(x)
    if z.level > b:
        raise LevelMismatch(f"z has level {z.level}, the family acts on level {b}")
    if x.min_level() > r:
        raise LevelMismatch(f"Partner {x} does not lie in the level-{r} subalgebra")
    if abs(z.re - x.re) > RE_PART_TOL:
        raise RePartMismatch(f"Re z = {z.re} but Re x = {x.re}")

    if z.min_level() <= r:
        return RotationAutomorphism.identity(b)
    source = RotationAutomorphism.frame(axis_of(x.embed(b)), b)
    target = RotationAutomorphism.frame(axis_of(z.embed(b)), b)
    return target.compose(source.inverse())


def apply(T: RotationAutomorphism, w: Any) -> CdNumber:
    return T.apply(w)


def find_partner(z: Any, r: int = 1) -> CdNumber:
    """
    Canonical partner of z in A_r: same real part, same |Im|.
      r = 1: Re z + i1 |Im z|
      r = 2: Re z + |Im z| * (direction of the quaternion part of Im z, or i1 if that is zero)
    Values already in A_r are their own partner.
    """
    z = CdNumber.coerce(z)
    if not 1 <= r <= 2:
        raise LevelMismatch(f"Partners live in levels 1 or 2, got {r}")
    if z.min_level() <= r:
        return z
    im_norm = float(np.linalg.norm(z.coeffs[1:]))
    if r == 1:
        return CdNumber([z.re, im_norm], 1).embed(z.level)
    head = z.coeffs[1:4]
    head_norm = float(np.linalg.norm(head))
    direction = np.zeros(3)
    if head_norm > 0.0:
        direction = head / head_norm
    else:
        direction[0] = 1.0
    return CdNumber(np.concatenate([[z.re], im_norm * direction]), 2).embed(z.level)


def partner_axes(T: RotationAutomorphism) -> dict[str, CdNumber]:
    """
    Images of i1 and i2 under T, the pair (M, N) that the (2, 3) family prescribes as
    i1 -> M, i2 -> N, i3 -> M N.
    """
    return {"M": T.images[0], "N": T.images[1], "MN": T.images[2]}
