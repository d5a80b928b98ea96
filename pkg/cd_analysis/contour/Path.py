"""
Rectifiable curves t in [0, 1] -> CdNumber.

A Path is either a single smooth piece (func) or a concatenation of pieces. Integrals over a
concatenation are summed piece by piece, so kinks at the joins never slow down refinement.
"""
from __future__ import annotations

from dataclasses import dataclass, field
import json
import math
from typing import Any, Callable, Sequence


import numpy as np


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.transcend.elementary import TWO_PI, exp
from config.config import INITIAL_SAMPLES, MAX_SAMPLES

CLOSURE_TOL = 1e-9


@dataclass(frozen=True)
class Path:
    func: Callable[[float], CdNumber] = field(compare=False)
    closed: bool = False
    pieces: tuple[Path, ...] = ()
    breaks: tuple[float, ...] = ()
    initial_samples: int = INITIAL_SAMPLES
    max_samples: int = MAX_SAMPLES
    name: str = ""

    def __post_init__(self):
        if self.initial_samples < 2 or self.max_samples < self.initial_samples:
            raise ValueError(f"Bad sample limits {self.initial_samples}, {self.max_samples}")
        if self.closed:
            start, end = self.start, self.end
            gap = (start - end).norm()
            if gap > CLOSURE_TOL * max(1.0, start.norm()):
                raise ValueError(f"Path '{self.name}' is flagged closed but its ends differ by {gap}")

    def __call__(self, t: float) -> CdNumber:
        return CdNumber.coerce(self.func(float(t)))

    @property
    def start(self) -> CdNumber:
        return self(0.0)

    @property
    def end(self) -> CdNumber:
        return self(1.0)

    @property
    def level(self) -> int:
        return self.start.level

    def samples(self, m: int) -> list[CdNumber]:
        return [self(k / m) for k in range(m + 1)]

    def length(self, m: int = 1024) -> float:
        """Polygonal estimate of the total variation."""
        if self.pieces:
            return sum(piece.length(m) for piece in self.pieces)
        points = self.samples(m)
        return sum((b - a).norm() for a, b in zip(points, points[1:]))

    def smooth_pieces(self) -> tuple[Path, ...]:
        return self.pieces if self.pieces else (self,)

    # Factories

    @classmethod
    def segment(cls, a: Any, b: Any, **kwargs) -> Path:
        a, b = CdNumber.coerce(a), CdNumber.coerce(b)
        level = max(a.level, b.level)
        a, b = a.embed(level), b.embed(level)
        step = b - a
        return cls(func=lambda t: a + step * t, name=kwargs.pop("name", f"[{a}, {b}]"), **kwargs)

    @classmethod
    def circle(cls, center: Any, radius: float, axis: Any, turns: float = 1.0, **kwargs) -> Path:
        """center + radius * exp(2 pi turns t N) for a unit imaginary N."""
        center, axis = CdNumber.coerce(center), CdNumber.coerce(axis)
        level = max(center.level, axis.level, 1)
        center, axis = center.embed(level), axis.embed(level)
        if abs(axis.re) > 0.0 or axis.norm() == 0.0:
            raise ValueError(f"Circle axis must be nonzero and purely imaginary, got {axis}")
        axis = axis / axis.norm()
        if radius <= 0.0:
            raise ValueError(f"Circle radius must be positive, got {radius}")
        closed = float(turns).is_integer()
        return cls(func=lambda t: center + exp(axis * (TWO_PI * turns * t)) * radius, closed=closed,
                   name=kwargs.pop("name", f"circle({center}, {radius}, {axis})"), **kwargs)

    @classmethod
    def arc(cls, a: Any, b: Any, center: Any = 0.0, **kwargs) -> Path:
        """
        Circular interpolation from a to b around center: the direction turns along the great
        circle between a - center and b - center while the radius changes linearly.
        """
        a, b, center = CdNumber.coerce(a), CdNumber.coerce(b), CdNumber.coerce(center)
        level = max(a.level, b.level, center.level)
        u, v = (a - center).embed(level), (b - center).embed(level)
        ru, rv = u.norm(), v.norm()
        if ru == 0.0 or rv == 0.0:
            raise ValueError("Arc end points must differ from the center")
        cosine = float(np.clip(u.coeffs @ v.coeffs / (ru * rv), -1.0, 1.0))
        omega = math.acos(cosine)
        if omega > math.pi - 1e-12:
            raise ValueError("Arc between antipodal points is not unique")
        centre = center.embed(level)

        def point(t: float) -> CdNumber:
            if omega < 1e-15:
                return centre + u + (v - u) * t
            direction = (u * (math.sin((1 - t) * omega) / ru) + v * (math.sin(t * omega) / rv)) / math.sin(omega)
            return centre + direction * ((1 - t) * ru + t * rv)

        return cls(func=point, name=kwargs.pop("name", f"arc({a}, {b})"), **kwargs)

    @classmethod
    def concat(cls, *paths: Path, weights: Sequence[float] | None = None, **kwargs) -> Path:
        """
        Join paths end to start. Piece k runs over a parameter interval proportional to
        weights[k] (equal shares by default).
        """
        if not paths:
            raise ValueError("Nothing to concatenate")
        for first, second in zip(paths, paths[1:]):
            gap = (first.end - second.start).norm()
            if gap > CLOSURE_TOL * max(1.0, first.end.norm()):
                raise ValueError(f"Paths do not join: gap {gap} between '{first.name}' and '{second.name}'")
        weights = [1.0] * len(paths) if weights is None else [float(w) for w in weights]
        if len(weights) != len(paths) or min(weights) <= 0.0:
            raise ValueError("Need one positive weight per path")
        edges = np.concatenate([[0.0], np.cumsum(weights) / sum(weights)])
        edges[-1] = 1.0
        pieces = tuple(piece for p in paths for piece in p.smooth_pieces())

        def point(t: float) -> CdNumber:
            k = min(int(np.searchsorted(edges, t, side="right")) - 1, len(paths) - 1)
            local = (t - edges[k]) / (edges[k + 1] - edges[k])
            return paths[k](min(max(local, 0.0), 1.0))

        start, end = paths[0].start, paths[-1].end
        closed = (start - end).norm() <= CLOSURE_TOL * max(1.0, start.norm())
        return cls(func=point, closed=closed, pieces=pieces, breaks=tuple(edges[1:-1]),
                   name=kwargs.pop("name", " + ".join(p.name for p in paths)), **kwargs)

    def reversed(self) -> Path:
        pieces = tuple(piece.reversed() for piece in reversed(self.pieces))
        func = self.func
        return Path(func=lambda t: func(1.0 - t), closed=self.closed, pieces=pieces,
                    breaks=tuple(1.0 - b for b in reversed(self.breaks)),
                    initial_samples=self.initial_samples, max_samples=self.max_samples,
                    name=f"reversed({self.name})")

    @classmethod
    def from_json(cls, data: str | dict) -> Path:
        """
        {"interpolation": "linear" | "arc", "center": [coeffs], "points": [[t, [coeffs]], ...]}
        Control points are ordered by t; consecutive points are joined by segments or arcs.
        """
        if isinstance(data, str):
            data = json.loads(data)
        interpolation = data.get("interpolation", "linear")
        if interpolation not in ("linear", "arc"):
            raise ValueError(f"Unknown interpolation '{interpolation}'")
        points = sorted(data["points"], key=lambda item: float(item[0]))
        if len(points) < 2:
            raise ValueError("A path needs at least two control points")
        knots = [float(t) for t, _ in points]
        if len(set(knots)) != len(knots):
            raise ValueError("Control point parameters must be distinct")
        values = [CdNumber(coeffs) for _, coeffs in points]
        center = CdNumber(data.get("center", [0.0]))
        if interpolation == "linear":
            parts = [cls.segment(a, b) for a, b in zip(values, values[1:])]
        else:
            parts = [cls.arc(a, b, center) for a, b in zip(values, values[1:])]
        if len(parts) == 1:
            return parts[0]
        return cls.concat(*parts, weights=np.diff(knots), name=data.get("name", "json path"))
