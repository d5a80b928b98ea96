"""
Complex seed functions that get extended to H and O.

Three seed kinds:
    power_series  g(y) = sum c_n (y - y0)^n with real c_n, on |y - y0| < R
    exp_sum       g(y) = sum c_n exp(a_n (y - y0)) with real c_n and a_n
    callable      any complex function handle
Real coefficients are what lets the rotation family commute with the seed.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
import math
from typing import Callable, Sequence


from .series import sum_series
from cd_analysis.exceptions import OutOfDomain, SeedSingularity
from config.config import FD_STEP_SCALE


KINDS = ("power_series", "exp_sum", "callable")


@dataclass(frozen=True)
class ExtensionSpec:
    kind: str
    level: int = 3
    center: float = 0.0
    radius: float = math.inf
    coefficients: tuple[float, ...] | Callable[[int], float] = ()
    exponents: tuple[float, ...] = ()
    func: Callable[[complex], complex] | None = field(default=None, compare=False)
    derivative: Callable[[complex], complex] | None = field(default=None, compare=False)
    spherical: bool = False
    name: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"Unknown seed kind '{self.kind}', expected one of {KINDS}")
        if not 1 <= self.level <= 3:
            raise ValueError(f"Target level must be 1, 2 or 3, got {self.level}")
        if self.spherical and self.level < 2:
            raise ValueError("The spherical flag needs level 2 or 3")
        if self.kind == "exp_sum" and len(self.coefficients) != len(self.exponents):
            raise ValueError("exp_sum needs one exponent per coefficient")
        if self.kind == "callable" and self.func is None:
            raise ValueError("callable seeds need a function handle")
        if (self.kind == "power_series" and not callable(self.coefficients)
                and math.isfinite(self.radius) and self.coefficients):
            bound = sum(abs(c) * self.radius ** n for n, c in enumerate(self.coefficients))
            if not math.isfinite(bound):
                raise ValueError("sum |c_n| R^n diverges on the declared radius")

    # Factories

    @classmethod
    def power_series(cls,
                     coefficients: Sequence[float] | Callable[[int], float],
                     center: float = 0.0,
                     radius: float = math.inf,
                     level: int = 3,
                     spherical: bool = False,
                     name: str = "",
                     ) -> ExtensionSpec:
        if not callable(coefficients):
            coefficients = tuple(_real(c, "power series coefficient") for c in coefficients)
        return cls(kind="power_series", level=level, center=_real(center, "center"), radius=radius,
                   coefficients=coefficients, spherical=spherical, name=name)

    @classmethod
    def exp_sum(cls,
                coefficients: Sequence[float],
                exponents: Sequence[float],
                center: float = 0.0,
                level: int = 3,
                spherical: bool = False,
                name: str = "",
                ) -> ExtensionSpec:
        return cls(kind="exp_sum", level=level, center=_real(center, "center"),
                   coefficients=tuple(_real(c, "exp_sum coefficient") for c in coefficients),
                   exponents=tuple(_real(a, "exp_sum exponent") for a in exponents),
                   spherical=spherical, name=name)

    @classmethod
    def from_callable(cls,
                      func: Callable[[complex], complex],
                      level: int = 3,
                      center: float = 0.0,
                      derivative: Callable[[complex], complex] | None = None,
                      spherical: bool = False,
                      name: str = "",
                      ) -> ExtensionSpec:
        return cls(kind="callable", level=level, center=_real(center, "center"), func=func,
                   derivative=derivative, spherical=spherical, name=name or getattr(func, "__name__", ""))

    # Seed evaluation on C

    def coefficient(self, n: int) -> float:
        if callable(self.coefficients):
            return float(self.coefficients(n))
        return self.coefficients[n] if n < len(self.coefficients) else 0.0

    def n_terms(self) -> int | None:
        """Fixed term count for finite coefficient lists, None for open-ended series."""
        return None if callable(self.coefficients) else max(len(self.coefficients), 1)

    def seed_value(self, y: complex) -> complex:
        y = complex(y)
        try:
            match self.kind:
                case "power_series":
                    if abs(y - self.center) >= self.radius:
                        raise OutOfDomain(f"|y - y0| = {abs(y - self.center)} is outside the radius {self.radius}")
                    value, _ = sum_series(self.coefficient, y - self.center, 1.0 + 0j, self.n_terms())
                case "exp_sum":
                    value = sum(c * cmath.exp(a * (y - self.center))
                                for c, a in zip(self.coefficients, self.exponents))
                case _:
                    value = self.func(y)
            value = complex(value)
        except (ZeroDivisionError, OverflowError, ValueError) as e:
            if isinstance(e, OutOfDomain):
                raise
            raise SeedSingularity(f"Seed '{self.name or self.kind}' is undefined at {y}: {e}") from e
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise SeedSingularity(f"Seed '{self.name or self.kind}' is not finite at {y}")
        return value

    def seed_derivative(self, y: complex, direction: complex = 1.0) -> complex:
        """
        Derivative of the seed at y along a complex direction. Holomorphic seeds give
        g'(y) * direction; other callables fall back to a central difference.
        """
        y = complex(y)
        match self.kind:
            case "power_series":
                value, _ = sum_series(lambda n: (n + 1) * self.coefficient(n + 1), y - self.center,
                                      1.0 + 0j, None if self.n_terms() is None else max(self.n_terms() - 1, 1))
                return complex(value) * direction
            case "exp_sum":
                return sum(c * a * cmath.exp(a * (y - self.center))
                           for c, a in zip(self.coefficients, self.exponents)) * direction
            case _:
                if self.derivative is not None:
                    return complex(self.derivative(y)) * direction
                delta = FD_STEP_SCALE * max(1.0, abs(y))
                return (self.seed_value(y + delta * direction) - self.seed_value(y - delta * direction)) / (2 * delta)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "coefficients": None if callable(self.coefficients) else list(self.coefficients),
            "exponents": list(self.exponents),
            "center": self.center,
            "radius": None if math.isinf(self.radius) else self.radius,
            "level": self.level,
            "spherical": self.spherical,
            "name": self.name,
        }


def _real(value, what: str) -> float:
    if isinstance(value, complex):
        if value.imag != 0.0:
            raise ValueError(f"{what} must be real, got {value}")
        value = value.real
    return float(value)
