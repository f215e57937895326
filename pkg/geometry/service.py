from __future__ import annotations

import logging
import math
from typing import Callable, List, Optional, Tuple

from census.models import Census
from census.service import get_census, max_genus
from core.errors import BudgetExceeded
from core.settings import Settings, get_settings
from counting.service import count_orbits_total
from geometry.models import HyperbolicParams, ShortOrbitBound

logger = logging.getLogger(__name__)

CensusLookup = Callable[[int], Census]

# beyond this the log term no longer separates consecutive k in a double
_EXACT_LIMIT = 2 ** 52
_NUDGE_STEPS = 4


def basmajian_min_length(k: int, c_x: float = 0.0) -> float:
    """Lower bound on the length of a closed geodesic with k self-intersections."""
    if k < 1:
        raise ValueError("min length is defined for k >= 1")
    if c_x < 0:
        raise ValueError("c_x must be non-negative")
    return max(c_x * math.sqrt(k), 0.25 * math.log(2 * k))


def _closed_form_budget(length: float, c_x: float) -> float:
    """floor(min((L/c_x)^2, e^{4L}/2)) before any float correction; inf when it cannot be represented."""
    if not math.isfinite(length) or length <= 0:
        raise ValueError("length must be a positive finite number")
    if not math.isfinite(c_x) or c_x < 0:
        raise ValueError("c_x must be a non-negative finite number")

    try:
        log_branch = math.exp(4.0 * length) / 2.0
    except OverflowError:
        log_branch = math.inf

    collar_branch = math.inf
    if c_x > 0:
        try:
            collar_branch = (length / c_x) ** 2
        except OverflowError:
            pass

    bound = min(collar_branch, log_branch)
    return math.floor(bound) if math.isfinite(bound) else math.inf


def intersection_budget(length: float, c_x: float = 0.0) -> int:
    """
    A(L) = floor(min((L/c_x)^2, e^{4L}/2)) + 1.

    Every geodesic of length <= L has fewer than A(L) self-intersections.
    Below 2**52 the value is nudged a few steps so that k < A(L) exactly when
    basmajian_min_length(k, c_x) <= L in floating point; above it the
    closed form is returned as is.
    """
    bound = _closed_form_budget(length, c_x)
    if math.isinf(bound):
        raise BudgetExceeded(f"intersection budget for length {length} is not representable")

    k_max = int(bound)
    if k_max < _EXACT_LIMIT:
        for _ in range(_NUDGE_STEPS):
            if basmajian_min_length(k_max + 1, c_x) > length:
                break
            k_max += 1
        for _ in range(_NUDGE_STEPS):
            if k_max < 1 or basmajian_min_length(k_max, c_x) <= length:
                break
            k_max -= 1
    return k_max + 1


def short_orbit_bound(
    params: HyperbolicParams,
    census_for: Optional[CensusLookup] = None,
    settings: Optional[Settings] = None,
) -> ShortOrbitBound:
    """Orbits that can contain a geodesic of length <= L: all k below the budget, every h."""
    s = settings or get_settings()
    cap = s.census.max_k

    rough = _closed_form_budget(params.length, params.c_x)
    if rough > cap + _NUDGE_STEPS:
        required = None if math.isinf(rough) else int(rough)
        raise BudgetExceeded(
            f"length {params.length} allows k far above the census cap k={cap}",
            required=required,
            limit=cap,
        )

    budget = intersection_budget(params.length, params.c_x)
    top = budget - 1
    if top > cap:
        raise BudgetExceeded(
            f"length {params.length} allows k up to {top}; censuses are capped at k={cap}",
            required=top,
            limit=cap,
        )

    lookup = census_for or get_census
    per_k: List[Tuple[int, int]] = []
    for k in range(budget):
        census = lookup(k)
        count = sum(
            count_orbits_total(k, h, params.g, params.n, "iso", census=census)
            for h in range(max_genus(k) + 1)
        )
        per_k.append((k, count))

    bound = sum(c for _, c in per_k)
    logger.info("short orbit bound: L=%s c_x=%s budget=%s bound=%s", params.length, params.c_x, budget, bound)
    return ShortOrbitBound(budget=budget, bound=bound, per_k=tuple(per_k), exponent=budget)
