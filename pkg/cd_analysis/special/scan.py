"""
Zero scan of zeta along the critical line 1/2 + t M.

Upsilon(t M) = xi(1/2 + t M) is real on the line and vanishes exactly where zeta does, so its
sign changes on a grid bracket the zeros. Each bracket is refined by bisection.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
import math
from typing import Any


import numpy as np
from scipy.optimize import bisect


from .xi import upsilon
from .zeta import zeta
from cd_analysis.algebra.CdNumber import CdNumber
from config.config import BISECTION_WIDTH, THREADS
from logger.logger import Logger
from utils.shared.decorators.get_exec_time import get_exec_time
from utils.shared.limiter_utils.Limiter import Limiter
from utils.shared.save_list_of_dicts_to_csv_via_pandas import save_list_of_dicts_to_csv_via_pandas
logger = Logger(logger_name=__name__)


SCAN_FILENAME = "critical_line_zeros.csv"
AXIS_TOL = 1e-12


@dataclass(frozen=True)
class ZeroBracket:
    t_bracket_lo: float
    t_bracket_hi: float
    refined_t: float
    abs_zeta: float

    def to_json(self) -> dict:
        return asdict(self)


def _check_axis(axis: Any) -> CdNumber:
    M = CdNumber.coerce(axis)
    if M.re != 0.0 or abs(M.norm() - 1.0) > AXIS_TOL:
        raise ValueError(f"The scan axis must be a unit imaginary number, got {M}")
    return M


def critical_line_value(t: float, axis: Any = None) -> float:
    """Re Upsilon(t M)."""
    M = CdNumber.basis(1, 2) if axis is None else _check_axis(axis)
    return upsilon(M * float(t)).re


def _scan_chunk(ts: np.ndarray, axis: CdNumber, width: float) -> list[ZeroBracket]:
    values = [critical_line_value(t, axis) for t in ts]
    brackets = []
    for k in range(len(ts) - 1):
        lo, hi = float(ts[k]), float(ts[k + 1])
        v_lo, v_hi = values[k], values[k + 1]
        if v_lo == 0.0:
            refined = lo
        elif v_lo * v_hi < 0.0:
            refined = bisect(critical_line_value, lo, hi, args=(axis,), xtol=width)
        else:
            continue
        abs_zeta = zeta(axis * refined + 0.5).norm()
        logger.debug(f"Zero bracket [{lo:.6f}, {hi:.6f}] refined to {refined:.9f}, |zeta| = {abs_zeta:.2e}")
        brackets.append(ZeroBracket(lo, hi, refined, abs_zeta))
    return brackets


def _chunks(ts: np.ndarray, count: int) -> list[np.ndarray]:
    """Contiguous pieces sharing their end points, so every grid interval lands in exactly one."""
    intervals = len(ts) - 1
    count = max(1, min(count, intervals))
    edges = np.linspace(0, intervals, count + 1).round().astype(int)
    return [ts[a:b + 1] for a, b in zip(edges[:-1], edges[1:]) if b > a]


@get_exec_time
def critical_line_scan(t_lo: float,
                       t_hi: float,
                       step: float,
                       axis: Any = None,
                       width: float = BISECTION_WIDTH,
                       save: bool = False,
                       threads: int | None = None,
                       progress_bar: bool = False,
                       ) -> list[ZeroBracket]:
    """
    Sign-change brackets of Re Upsilon(t M) on the grid t_lo + k step, t <= t_hi, each refined
    to the given width. Any unit imaginary axis M gives the same brackets.
    """
    if not 0.0 < t_lo < t_hi:
        raise ValueError(f"Need 0 < t_lo < t_hi, got t_lo = {t_lo}, t_hi = {t_hi}")
    if not step > 0.0 or not math.isfinite(step):
        raise ValueError(f"Need a positive step, got {step}")
    if not width > 0.0:
        raise ValueError(f"Need a positive bisection width, got {width}")
    M = _check_axis(CdNumber.basis(1, 2) if axis is None else axis)

    count = int(math.floor((t_hi - t_lo) / step + 1e-9))
    if count < 1:
        raise ValueError(f"Step {step} is wider than the interval ({t_lo}, {t_hi})")
    ts = t_lo + step * np.arange(count + 1)

    limiter = Limiter(semaphore=threads or THREADS, progress_bar=progress_bar)
    pieces = limiter.run(func=_scan_chunk, inputs=_chunks(ts, limiter.size), axis=M, width=width)
    brackets = [bracket for piece in pieces for bracket in piece]
    logger.info(f"Scanned {len(ts)} points on 1/2 + t M, t in [{t_lo}, {ts[-1]}]: {len(brackets)} zero(s)")

    if save:
        save_list_of_dicts_to_csv_via_pandas([b.to_json() for b in brackets], SCAN_FILENAME, logger=logger)
    return brackets
