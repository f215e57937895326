from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Literal, Tuple

from pydantic import BaseModel, ConfigDict

from ribbon.models import RibbonGraphClass

# ------------------------------------------
# In-memory census
# ------------------------------------------


@dataclass(frozen=True)
class Census:
    """
    RC(k): one RibbonGraphClass per isomorphism class, sorted by (h, key).
    """

    k: int
    classes: Tuple[RibbonGraphClass, ...]

    @cached_property
    def by_genus(self) -> Dict[int, Tuple[RibbonGraphClass, ...]]:
        out: Dict[int, list] = {}
        for c in self.classes:
            out.setdefault(c.h, []).append(c)
        return {h: tuple(v) for h, v in out.items()}

    def genus_classes(self, h: int) -> Tuple[RibbonGraphClass, ...]:
        return self.by_genus.get(int(h), ())


# ------------------------------------------
# Census file records (JSON lines)
# ------------------------------------------


class CensusHeaderRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    record: Literal["header"] = "header"
    k: int
    tool: str
    version: str
    format: int
    classes: int


class CensusClassRecord(BaseModel):
    """
    One ribbon-graph class.

    - key:  lowercase hex of the canonical encoding ("" for the annulus)
    - word: witness Gauss word in text form
    - aut / baut: group orders
    """
    model_config = ConfigDict(extra="forbid")

    k: int
    h: int
    b: int
    aut: int
    baut: int
    key: str
    word: str
