from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Tuple

from ribbon.models import RibbonGraphClass

# ------------------------------------------
# Type aliases
# ------------------------------------------

# iso: every valid gluing; no_disk: no part glued to an unpunctured disk
CountMode = Literal["iso", "no_disk"]
COUNT_MODES: Tuple[str, ...] = ("iso", "no_disk")

# (g_i, n_i, b_i) of the surface glued onto one part
Signature = Tuple[int, int, int]


@dataclass(frozen=True)
class OrbitInvariant:
    """
    A partition of the boundary faces plus one signature per part.

    Stored as the least element of its BAut-orbit: parts sorted, each part
    sorted, signatures aligned with parts.
    """

    graph: RibbonGraphClass
    parts: Tuple[Tuple[int, ...], ...]
    signatures: Tuple[Signature, ...]

    @property
    def r(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class OrbitStatistics:
    k: int
    g: int
    n: int
    orbits: int
    disk_orbits: int
    distinct_orbits: int

    @property
    def disk_fraction(self) -> Fraction:
        return Fraction(self.disk_orbits, self.orbits) if self.orbits else Fraction(0)

    @property
    def distinct_signature_fraction(self) -> Fraction:
        return Fraction(self.distinct_orbits, self.orbits) if self.orbits else Fraction(0)

    @property
    def rigid_fraction(self) -> Fraction:
        """Orbits with no disk in the complement: homotopy determines isotopy."""
        return 1 - self.disk_fraction if self.orbits else Fraction(0)
