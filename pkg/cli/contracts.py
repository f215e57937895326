# cli/contracts.py
from __future__ import annotations

from fractions import Fraction
from typing import Any, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from census.models import CensusClassRecord

OutputFormat = Literal["json", "csv"]


class Rational(BaseModel):
    """Exact rational on the wire."""
    model_config = ConfigDict(extra="forbid")

    num: int
    den: int = 1

    @classmethod
    def of(cls, value: Fraction) -> "Rational":
        f = Fraction(value)
        return cls(num=f.numerator, den=f.denominator)


class ReportEnvelope(BaseModel):
    tool: str
    version: str
    command: str
    result: Any


# ------------------------------------------
# census / constants
# ------------------------------------------


class GenusSummary(BaseModel):
    h: int
    classes: int
    C: Rational


class CensusReport(BaseModel):
    k: int
    genus: Optional[int] = None
    summary: List[GenusSummary] = Field(default_factory=list)
    classes: List[CensusClassRecord] = Field(default_factory=list)


class ConstantsReport(BaseModel):
    k: int
    C_k: Rational
    planar_classes: int
    by_genus: List[GenusSummary] = Field(default_factory=list)


# ------------------------------------------
# count
# ------------------------------------------


class GraphCount(BaseModel):
    key: str
    h: int
    b: int
    baut: int
    count: int


class CountReport(BaseModel):
    k: int
    h: Optional[int] = None
    genus: int
    punctures: int
    mode: str
    exclude_punctured_disks: bool = False
    up_to: bool = False
    count: int
    per_graph: List[GraphCount] = Field(default_factory=list)


# ------------------------------------------
# asymptotic / stats
# ------------------------------------------


class AsymptoticReport(BaseModel):
    k: int
    h: Optional[int] = None
    genus: int
    punctures: int
    value: Rational
    closed: Optional[Rational] = None


class StatsReport(BaseModel):
    k: int
    genus: int
    punctures: int
    orbits: int
    disk_orbits: int
    distinct_orbits: int
    disk_fraction: Rational
    distinct_signature_fraction: Rational
    rigid_fraction: Rational


# ------------------------------------------
# geometry
# ------------------------------------------


class KCount(BaseModel):
    k: int
    count: int


class GeometryReport(BaseModel):
    length: float
    c_x: float
    genus: int
    punctures: int
    budget: int
    exponent: int
    bound: int
    per_k: List[KCount] = Field(default_factory=list)
