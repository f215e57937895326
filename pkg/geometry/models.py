from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field


class HyperbolicParams(BaseModel):
    """
    Inputs of the short-geodesic bound.

    - length: length threshold L
    - c_x:    collar constant of the surface (0 drops the collar term)
    - g, n:   signature of the surface
    """
    model_config = ConfigDict(frozen=True)

    length: float = Field(gt=0, allow_inf_nan=False)
    c_x: float = Field(default=0.0, ge=0, allow_inf_nan=False)
    g: int = Field(ge=0)
    n: int = Field(ge=0)


@dataclass(frozen=True)
class ShortOrbitBound:
    budget: int
    bound: int
    # (k, orbits of curves with exactly k self-intersections)
    per_k: Tuple[Tuple[int, int], ...]
    # degree of the polynomial bound in (g+1)(n+1)
    exponent: int
