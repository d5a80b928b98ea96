from __future__ import annotations

from dataclasses import dataclass
import math


from cd_analysis.algebra.CdNumber import CdNumber


@dataclass(frozen=True, slots=True)
class PolarForm:
    """
    z = modulus * exp(axis * (angle + 2*pi*branch)).

    axis is a unit purely imaginary CdNumber. For numerically real z the axis is not determined
    by z; i1 is used unless a caller supplies a reference direction.
    """
    modulus: float
    axis: CdNumber
    angle: float
    branch: int = 0

    @property
    def phase(self) -> float:
        """Total angle including the branch winding."""
        return self.angle + 2.0 * math.pi * self.branch

    def reconstruct(self) -> CdNumber:
        from .elementary import exp
        return exp(self.axis * self.phase) * self.modulus

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "axis": self.axis.to_json(),
            "angle": self.angle,
            "branch": self.branch,
        }
