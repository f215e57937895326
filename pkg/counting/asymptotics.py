from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Optional

from census.models import Census
from census.service import constant_C
from counting.combinatorics import binomial


def asymptotic_orbit_count(k: int, h: int, g: int, n: int, census: Optional[Census] = None) -> Fraction:
    """C_{k,h} * C(g+k-3h+1, k+1-2h) * C(n+k+1-2h, k+1-2h)."""
    e = k + 1 - 2 * h
    if e < 0:
        return Fraction(0)
    c = constant_C(k, h, census)
    return c * binomial(g + k - 3 * h + 1, e) * binomial(n + e, e)


def asymptotic_total(k: int, g: int, n: int, census: Optional[Census] = None) -> Fraction:
    return constant_C(k, 0, census) * binomial(g + k + 1, k + 1) * binomial(n + k + 1, k + 1)


def asymptotic_closed(k: int, g: int, census: Optional[Census] = None) -> Fraction:
    """Leading term on closed surfaces: C_k * g^(k+1) / (k+1)!."""
    return constant_C(k, 0, census) * Fraction(g ** (k + 1), factorial(k + 1))
