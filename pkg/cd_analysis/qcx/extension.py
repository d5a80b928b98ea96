"""
Quasi-conformal extension engine.

A complex seed g is extended to H or O by
    x = y0 + partner(z - y0),   T = R_{z - y0, x - y0},   F(z) = T(g(x)),
so F restricted to C is g and F commutes with every rotation of the family.
"""
from __future__ import annotations

from typing import Any, Callable


import numpy as np


from .ExtensionSpec import ExtensionSpec
from .series import sum_series
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import DivergenceRadius, LevelMismatch, OutOfDomain
from cd_analysis.rotor.rotation import build_rotation, find_partner
from cd_analysis.transcend.iterated import E
from logger.logger import Logger
logger = Logger(logger_name=__name__)


def _prepare(spec: ExtensionSpec, z: Any) -> CdNumber:
    """
    Embed z at the spec's level. A spherical spec reads z as the coordinate vector p of E and
    extends at E(p), so E is applied to the argument before the seed or series sees it. E is the
    identity on C, so both conventions agree on the complex slice.
    """
    z = CdNumber.coerce(z)
    if z.level > spec.level:
        raise OutOfDomain(f"Level-{z.level} argument for a level-{spec.level} extension")
    z = z.embed(spec.level)
    if spec.spherical:
        z = E(z)
    return z


def eval_extension(spec: ExtensionSpec, z: Any) -> CdNumber:
    z = _prepare(spec, z)
    if z.min_level() <= 1:
        return CdNumber.from_complex(spec.seed_value(z.to_complex()), spec.level)
    w = z - spec.center
    x = find_partner(w) + spec.center
    T = build_rotation(w, x - spec.center, (1, spec.level))
    gx = CdNumber.from_complex(spec.seed_value(x.to_complex()), spec.level)
    return T.apply(gx)


def eval_series_direct(spec: ExtensionSpec, z: Any) -> CdNumber:
    """
    sum c_n (z - y0)^n evaluated with hypercomplex powers; must agree with eval_extension.
    """
    if spec.kind != "power_series":
        raise ValueError(f"Direct summation needs a power series seed, got '{spec.kind}'")
    z = _prepare(spec, z)
    w = z - spec.center
    if w.norm() >= spec.radius:
        raise DivergenceRadius(f"|z - y0| = {w.norm()} is not below the radius {spec.radius}")
    value, used = sum_series(spec.coefficient, w, CdNumber.real(1.0, spec.level), spec.n_terms())
    logger.debug(f"Direct series at {z} used {used} terms")
    return value


def zero_surface(z0: Any,
                 y0: float = 0.0,
                 n_samples: int = 64,
                 level: int | None = None,
                 seed: int = 0,
                 ) -> list[CdNumber]:
    """
    Sample points of S = {z : Re z = Re z0, |Im z| = |Im z0|}, the orbit of z0 under the
    (1, b) rotation family. Real z0 is fixed by every rotation, so S = {z0}.

    y0 is the real marked point of the family; shifting by a real number leaves S unchanged.
    """
    z0 = CdNumber.coerce(z0)
    level = level if level is not None else max(z0.level, 2)
    if z0.level > level:
        raise LevelMismatch(f"z0 has level {z0.level}, surface requested at level {level}")
    w0 = (z0 - y0).embed(level)
    im_norm = w0.im.norm()
    if im_norm == 0.0:
        return [z0.embed(level)]
    rng = np.random.default_rng(seed)
    points = [z0.embed(level)]
    for _ in range(n_samples - 1):
        u = rng.normal(size=2 ** level - 1)
        u /= np.linalg.norm(u)
        points.append(CdNumber(np.concatenate([[w0.re], im_norm * u]), level) + y0)
    return points


def compose_extensions(spec_f: ExtensionSpec, spec_g: ExtensionSpec) -> ExtensionSpec:
    """Extension of the seed g o f."""
    if spec_f.center != spec_g.center:
        logger.debug("Composing seeds with different marked points; using the inner one")
    level = max(spec_f.level, spec_g.level)

    def composed(y: complex) -> complex:
        inner = spec_f.seed_value(y)
        return spec_g.seed_value(inner)

    return ExtensionSpec.from_callable(
        composed, level=level, center=spec_f.center,
        name=f"({spec_g.name or spec_g.kind})o({spec_f.name or spec_f.kind})",
    )


def product_extension(spec_1: ExtensionSpec, spec_2: ExtensionSpec) -> ExtensionSpec:
    """Extension of the pointwise product g1 * g2 of two seeds of the same family."""
    if spec_1.center != spec_2.center:
        raise ValueError(f"Products need one marked point, got {spec_1.center} and {spec_2.center}")
    if spec_1.level != spec_2.level:
        raise LevelMismatch(f"Products need one target level, got {spec_1.level} and {spec_2.level}")

    def product(y: complex) -> complex:
        return spec_1.seed_value(y) * spec_2.seed_value(y)

    return ExtensionSpec.from_callable(
        product, level=spec_1.level, center=spec_1.center,
        name=f"({spec_1.name or spec_1.kind})*({spec_2.name or spec_2.kind})",
    )


def extension_callable(spec: ExtensionSpec) -> Callable[[Any], CdNumber]:
    """The extension as a plain function of a CdNumber."""
    def extended(z: Any) -> CdNumber:
        return eval_extension(spec, z)
    extended.__name__ = spec.name or spec.kind
    return extended
