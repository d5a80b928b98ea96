from __future__ import annotations

from typing import Any, Callable


from config.config import SERIES_MAX_TERMS, SERIES_STOP

# Series with structural zeros (sin, cos) need a run of small terms before stopping.
QUIET_RUN = 4


def sum_series(coefficient: Callable[[int], float],
               w: Any,
               one: Any,
               n_terms: int | None = None,
               stop: float = SERIES_STOP,
               max_terms: int = SERIES_MAX_TERMS,
               ) -> tuple[Any, int]:
    """
    Sum c_0 + c_1 w + c_2 w^2 + ... for complex w or CdNumber w.

    With n_terms set, exactly that many terms are summed. Otherwise summation stops once
    QUIET_RUN consecutive terms are at most stop * |partial sum|, or after max_terms terms.

    Returns:
        (sum, number of terms used)
    """
    total = one * float(coefficient(0))
    power = one
    quiet = 0
    limit = n_terms if n_terms is not None else max_terms
    for n in range(1, limit):
        power = power * w
        c = float(coefficient(n))
        term = power * c
        total = total + term
        if n_terms is None:
            quiet = quiet + 1 if abs(term) <= stop * abs(total) else 0
            if quiet >= QUIET_RUN:
                return total, n + 1
    return total, limit
