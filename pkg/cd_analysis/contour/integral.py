"""
Line integrals, residues and n-residues.

Riemann sums use the node/midpoint pattern sum f(z_mid) (z_{k+1} - z_k). Their error is a
series in even powers of the step, so successive doublings are combined by Richardson
extrapolation and refinement stops once two extrapolated estimates agree to tol.
"""
from __future__ import annotations

from typing import Any, Callable, Sequence


from .Path import Path
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import (BranchFailure, CdAnalysisError, EvaluationFailure, NoConvergence,
                                    OutOfDomain, ZeroArgument)
from cd_analysis.transcend.elementary import TWO_PI, exp, ln, ln_nearest
from cd_analysis.transcend.iterated import exp_n
from config.config import INITIAL_SAMPLES, LINE_INTEGRAL_TOL, MAX_SAMPLES
from logger.logger import Logger
logger = Logger(logger_name=__name__)


ORDERS = ("right", "left", "form")
MAX_EXTRAPOLATION = 6


def _evaluate(f: Callable, *args) -> CdNumber:
    try:
        return CdNumber.coerce(f(*args))
    except (ArithmeticError, ValueError, CdAnalysisError) as e:
        raise EvaluationFailure(f"Integrand failed at {args[0]}: {e}") from e


def riemann_sum(f: Callable, points: Sequence[CdNumber], order: str = "right") -> CdNumber:
    """
    points holds 2m + 1 samples: even entries are nodes, odd entries midpoints.
    """
    if order not in ORDERS:
        raise ValueError(f"Unknown order '{order}', expected one of {ORDERS}")
    total = CdNumber.real(0.0, points[0].level)
    for k in range(0, len(points) - 2, 2):
        mid = points[k + 1]
        dz = points[k + 2] - points[k]
        match order:
            case "right":
                total = total + _evaluate(f, mid) * dz
            case "left":
                total = total + dz * _evaluate(f, mid)
            case _:
                total = total + _evaluate(f, mid, dz)
    return total


def refine(estimate: Callable[[int], CdNumber],
           tol: float = LINE_INTEGRAL_TOL,
           initial: int = INITIAL_SAMPLES,
           max_samples: int = MAX_SAMPLES,
           what: str = "integral",
           ) -> CdNumber:
    """
    Double m from initial until successive extrapolated estimates differ by less than
    tol * max(1, |estimate|).
    """
    previous_row: list[CdNumber] = []
    m = initial
    while m <= max_samples:
        row = [estimate(m)]
        for j in range(1, min(len(previous_row), MAX_EXTRAPOLATION) + 1):
            factor = 4.0 ** j
            row.append(row[j - 1] + (row[j - 1] - previous_row[j - 1]) / (factor - 1.0))
        if previous_row:
            change = (row[-1] - previous_row[-1]).norm()
            logger.debug(f"{what}: m = {m}, change {change:.3e}")
            if change < tol * max(1.0, row[-1].norm()):
                return row[-1]
        previous_row = row
        m *= 2
    raise NoConvergence(f"{what} did not settle to {tol} within {max_samples} samples")


def line_integral(f: Callable,
                  path: Path,
                  tol: float = LINE_INTEGRAL_TOL,
                  order: str = "right",
                  ) -> CdNumber:
    """
    Integral of f along path.

    order:
        right  sum f(z) dz
        left   sum dz f(z)
        form   sum f(z, dz), for integrands that place the increment themselves
    The two products agree for complex integrands on complex paths.
    """
    if order not in ORDERS:
        raise ValueError(f"Unknown order '{order}', expected one of {ORDERS}")
    total = None
    for piece in path.smooth_pieces():
        value = refine(lambda m, piece=piece: riemann_sum(f, piece.samples(2 * m), order),
                       tol, piece.initial_samples, piece.max_samples, what=f"integral over '{piece.name}'")
        total = value if total is None else total + value
    return total


def _unit_imaginary(N: Any) -> tuple[CdNumber, float]:
    N = CdNumber.coerce(N)
    if N.re != 0.0:
        raise OutOfDomain(f"Residue directions must be purely imaginary, got {N}")
    scale = N.norm()
    return (N / scale if scale > 0.0 else N), scale


def residue(f: Callable,
            z0: Any,
            N: Any,
            rho: float,
            order: str = "right",
            tol: float = LINE_INTEGRAL_TOL,
            ) -> CdNumber:
    """
    res(z0, f).N = (2 pi)^{-1} int_gamma f(z) dz with gamma(t) = z0 + rho exp(2 pi t N).

    Non-unit N are handled by real homogeneity: res.(a N) = a res.N, res.0 = 0.
    """
    z0 = CdNumber.coerce(z0)
    unit, scale = _unit_imaginary(N)
    level = max(z0.level, unit.level, 1)
    if scale == 0.0:
        return CdNumber.real(0.0, level)
    loop = Path.circle(z0.embed(level), rho, unit.embed(level), name=f"residue loop at {z0}")
    return line_integral(f, loop, tol, order) * (scale / TWO_PI)


def _lift_logarithms(points: Sequence[CdNumber], a: Sequence[CdNumber]) -> list[CdNumber]:
    """
    Continuous Ln_{n-1}(a; w) along the samples w: every stage takes the branch of ln nearest
    the same stage at the previous sample, starting from principal branches.
    """
    lifted = []
    stages: list[CdNumber] | None = None
    for w in points:
        current = []
        for k, a_k in enumerate(a):
            try:
                if stages is None:
                    value = ln(w)
                else:
                    value = ln_nearest(w, stages[k])
            except ZeroArgument as e:
                raise BranchFailure(f"Intermediate logarithm hit zero at stage {k + 1}") from e
            current.append(value)
            w = a_k.inverse() * value
        stages = current
        lifted.append(w)
    return lifted


def residue_n(f: Callable,
              z0: Any,
              M: Any,
              rho: float,
              a: Sequence[Any] = (),
              order: str = "right",
              tol: float = LINE_INTEGRAL_TOL,
              ) -> CdNumber:
    """
    n-residue with n = len(a) + 1:
        (2 pi)^{-1} int_{gamma_n} f(z0 + L(z)) dL(z),  L(z) = Ln_{n-1}(a; z - z0),
        gamma_n(t) = z0 + Exp_{n-1}(a; rho exp(2 pi M t)).
    L pulls gamma_n back onto the circle rho exp(2 pi M t), so the value does not depend on a.
    """
    if not a:
        return residue(f, z0, M, rho, order, tol)
    z0 = CdNumber.coerce(z0)
    a = [CdNumber.coerce(a_k) for a_k in a]
    if any(a_k.norm() == 0.0 for a_k in a):
        raise ZeroArgument("n-residue coefficients must be nonzero")
    unit, scale = _unit_imaginary(M)
    level = max([z0.level, unit.level, 1] + [a_k.level for a_k in a])
    if scale == 0.0:
        return CdNumber.real(0.0, level)
    z0, unit = z0.embed(level), unit.embed(level)
    a = [a_k.embed(level) for a_k in a]

    def curve(t: float) -> CdNumber:
        return z0 + exp_n(a, exp(unit * (TWO_PI * t)) * rho)

    def estimate(m: int) -> CdNumber:
        points = [curve(k / (2 * m)) - z0 for k in range(2 * m + 1)]
        pulled_back = _lift_logarithms(points, a)
        if order == "form":
            integrand = lambda L, dL: f(z0 + L, dL)
        else:
            integrand = lambda L: f(z0 + L)
        return riemann_sum(integrand, pulled_back, order)

    value = refine(estimate, tol, INITIAL_SAMPLES, MAX_SAMPLES, what=f"{len(a) + 1}-residue at {z0}")
    return value * (scale / TWO_PI)
