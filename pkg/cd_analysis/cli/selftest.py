"""
Desk-scale acceptance checks, one suite per engine module. Every suite draws from its own
seeded generator, so the table is the same on every run and for any thread count.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
import math
from typing import Callable


import numpy as np


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.algebra.GeneratorTable import REFERENCE_PRODUCTS
from cd_analysis.algebra.arithmetic import associator, random_cd
from cd_analysis.contour.integral import residue
from cd_analysis.rotor.rotation import build_rotation, find_partner
from cd_analysis.special.theta import theta_psi
from cd_analysis.special.xi import upsilon
from cd_analysis.special.zeta import chi, zeta
from cd_analysis.transcend.elementary import exp, ln
from cd_analysis.transcend.iterated import E
from cd_analysis.xform.TransformSpec import TransformSpec
from cd_analysis.xform.pairs import gamma_mellin, gaussian, laplace_pair_check, logistic, unit_step
from config.config import THREADS
from logger.logger import Logger
from utils.shared.decorators.get_exec_time import get_exec_time
from utils.shared.limiter_utils.Limiter import Limiter
from utils.shared.next_step import next_step
logger = Logger(logger_name=__name__)


SEED = 20240601


@dataclass(frozen=True)
class Check:
    suite: str
    check: str
    residual: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.threshold

    def to_json(self) -> dict:
        return {**asdict(self), "passed": self.passed}


def _relative(a: CdNumber, b: CdNumber) -> float:
    return (a - b).norm() / max(1.0, b.norm())


def _algebra(rng: np.random.Generator) -> list[Check]:
    table = max((CdNumber.basis(j, 3) * CdNumber.basis(k, 3) - CdNumber.basis(l, 3) * sign).norm()
                for (j, k), (sign, l) in REFERENCE_PRODUCTS.items())
    assoc = alt = 0.0
    for _ in range(2000):
        a, b, c = (random_cd(rng, 2) for _ in range(3))
        assoc = max(assoc, associator(a, b, c).norm() / (a.norm() * b.norm() * c.norm()))
        x, y = random_cd(rng, 3), random_cd(rng, 3)
        scale = x.norm() ** 2 * y.norm()
        alt = max(alt, associator(x, x, y).norm() / scale, associator(y, x, x).norm() / scale)
    return [Check("algebra", "octonion table products", table, 0.0),
            Check("algebra", "quaternion associativity", assoc, 1e-12),
            Check("algebra", "octonion alternativity", alt, 1e-12)]


def _transcend(rng: np.random.Generator) -> list[Check]:
    round_trip = 0.0
    for _ in range(500):
        z = random_cd(rng, 3)
        round_trip = max(round_trip, _relative(exp(ln(z)), z))
    y = CdNumber([0.3, -1.7], 1).embed(3)
    return [Check("transcend", "exp(ln z) = z", round_trip, 1e-10),
            Check("transcend", "E(y) = y on C", (E(y) - y).norm(), 1e-15)]


def _rotor(rng: np.random.Generator) -> list[Check]:
    orth = mult = 0.0
    for _ in range(100):
        z = random_cd(rng, 3)
        defects = build_rotation(z, find_partner(z)).defects()
        orth = max(orth, defects["orthonormality"])
        mult = max(mult, defects["multiplicativity"])
    return [Check("rotor", "orthonormal images", orth, 1e-11),
            Check("rotor", "multiplicative on generators", mult, 1e-11)]


def _contour(rng: np.random.Generator) -> list[Check]:
    y = random_cd(rng, 3, scale=0.5)
    worst = 0.0
    for j in range(1, 8):
        N = CdNumber.basis(j, 3)
        for rho in (0.1, 1.0):
            value = residue(lambda z: (z - y).inverse(), y, N, rho)
            worst = max(worst, (value - N).norm())
    return [Check("contour", "res((z - y)^-1, y).N = N", worst, 1e-8)]


def _xform(rng: np.random.Generator) -> list[Check]:
    directions = [random_cd(rng, 2, scale=0.5).im for _ in range(3)]
    probes = [d + 1.0 for d in directions]
    near_zero = [d - 0.5 for d in directions]
    checks = []
    for pair, points in ((unit_step(), probes), (gaussian(), probes), (logistic(), near_zero), (gamma_mellin(), probes)):
        checks.append(Check("xform", f"image of {pair.name}", laplace_pair_check(pair, points, TransformSpec()), 1e-7))
    return checks


def _special(rng: np.random.Generator) -> list[Check]:
    probes = [(random_cd(rng, 2) * 3.0).im + (0.1 + 0.2 * k) for k in range(5)]
    functional = max((zeta(z) - chi(z) * zeta(1.0 - z)).norm() for z in probes)
    reflection = max((chi(z) * chi(1.0 - z) - 1.0).norm() for z in probes)
    even = max(_relative(upsilon(z - 0.5), upsilon(0.5 - z)) for z in probes)
    modular = max(abs(2 * theta_psi(x) + 1 - (2 * theta_psi(1 / x) + 1) / math.sqrt(x)) for x in (1 / 3, 1.0, 3.0))
    pole = (residue(zeta, 1.0, CdNumber.basis(1, 1), 0.5) - CdNumber.basis(1, 1)).norm()
    return [Check("special", "zeta(2) = pi^2/6", abs(zeta(2.0).re - math.pi ** 2 / 6), 1e-8),
            Check("special", "zeta(z) = chi(z) zeta(1 - z)", functional, 1e-6),
            Check("special", "chi(z) chi(1 - z) = 1", reflection, 1e-8),
            Check("special", "Upsilon(z) = Upsilon(-z)", even, 1e-8),
            Check("special", "theta modular identity", modular, 1e-12),
            Check("special", "residue of zeta at 1", pole, 1e-7)]


SUITES: dict[str, Callable[[np.random.Generator], list[Check]]] = {
    "algebra": _algebra,
    "transcend": _transcend,
    "rotor": _rotor,
    "contour": _contour,
    "xform": _xform,
    "special": _special,
}


def _run_suite(name: str) -> list[Check]:
    next_step(f"Self-test suite '{name}'")
    return SUITES[name](np.random.default_rng(SEED))


@get_exec_time
def run_selftest(suites: list[str] | None = None, threads: int | None = None, progress_bar: bool = False) -> list[Check]:
    names = list(suites or SUITES)
    unknown = set(names) - set(SUITES)
    if unknown:
        raise ValueError(f"Unknown suites {sorted(unknown)}, expected a subset of {list(SUITES)}")
    limiter = Limiter(semaphore=threads or THREADS, progress_bar=progress_bar)
    results = limiter.run(func=_run_suite, inputs=names)
    checks = [check for suite in results for check in suite]
    failed = [c for c in checks if not c.passed]
    logger.info(f"Self-test: {len(checks) - len(failed)}/{len(checks)} checks passed")
    for c in failed:
        logger.warning(f"FAILED {c.suite}: {c.check} residual {c.residual:.3e} > {c.threshold:.1e}")
    return checks
