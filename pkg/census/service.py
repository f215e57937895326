from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Optional, Tuple

from census.models import Census
from census.store import discard_census, load_census, save_census
from core.errors import BudgetExceeded, CensusUnavailable
from core.settings import Settings, get_settings
from gauss.models import GaussWord
from gauss.service import (
    build_map,
    enumerate_double_occurrence_words,
    gauss_word_count,
    gauss_word_prefixes,
    word_is_dihedral_minimal,
)
from providers.factory import get_providers
from providers.impl.jobs_local_inline import LocalInlineJobRunner
from providers.jobs import JobRunner
from providers.storage import StorageProvider
from ribbon.models import ANNULUS, RibbonGraphClass
from ribbon.service import canonical_form, classify_map, map_from_key

logger = logging.getLogger(__name__)

Witness = Tuple[Tuple[int, ...], Tuple[str, ...]]


# ---------------------------------------------------------------------
# Shard worker
# ---------------------------------------------------------------------

def _merge_witness(found: Dict[bytes, Witness], key: bytes, cand: Witness) -> None:
    prev = found.get(key)
    if prev is None or cand < prev:
        found[key] = cand


def canonicalize_shard(task: Tuple[int, Tuple[int, ...]]) -> Dict[bytes, Witness]:
    """
    Canonical keys reached from every signed word starting with a prefix.

    Only words that are least among their rotations and reversals are
    mapped; each class keeps its least witness.
    """
    k, prefix = task
    found: Dict[bytes, Witness] = {}
    for word in enumerate_double_occurrence_words(k, prefix):
        for signs in product("+-", repeat=k):
            if not word_is_dihedral_minimal(word, signs):
                continue
            key = canonical_form(build_map(word, signs))
            _merge_witness(found, key, (word, signs))
    return found


# ---------------------------------------------------------------------
# Census building
# ---------------------------------------------------------------------

def _annulus_census() -> Census:
    return Census(k=0, classes=(classify_map(ANNULUS, witness=GaussWord(word=(), signs=())),))


def _classes_from(found: Dict[bytes, Witness]) -> Tuple[RibbonGraphClass, ...]:
    classes: List[RibbonGraphClass] = []
    for key, (word, signs) in found.items():
        witness = GaussWord(word=word, signs=signs)  # type: ignore[arg-type]
        classes.append(classify_map(map_from_key(key), witness=witness))
    classes.sort(key=lambda c: (c.h, c.canonical_key))
    return tuple(classes)


def build_census(
    k: int,
    words: Optional[Iterable[GaussWord]] = None,
    runner: Optional[JobRunner] = None,
    settings: Optional[Settings] = None,
) -> Census:
    """
    Enumerate RC(k).

    With `words` the given words are classified in-process (any order);
    otherwise the full word stream is split by prefix and fanned out
    through `runner`, and a single merge dedupes by canonical key.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return _annulus_census()

    found: Dict[bytes, Witness] = {}

    if words is not None:
        for w in words:
            if w.k != k:
                raise ValueError(f"word of rank {w.k} in a k={k} census")
            if not word_is_dihedral_minimal(w.word, w.signs):
                continue
            _merge_witness(found, canonical_form(build_map(w.word, w.signs)), (w.word, w.signs))
        return Census(k=k, classes=_classes_from(found))

    s = settings or get_settings()
    total = gauss_word_count(k)
    if total > s.census.word_budget:
        raise BudgetExceeded(
            f"census k={k} needs {total} signed words; budget is {s.census.word_budget}",
            required=total,
            limit=s.census.word_budget,
        )

    prefixes = gauss_word_prefixes(k, s.census.shard_depth)
    tasks = [(k, p) for p in prefixes]
    logger.info("census build: k=%s words=%s shards=%s", k, total, len(tasks))

    for partial in (runner or LocalInlineJobRunner()).map(canonicalize_shard, tasks):
        for key, cand in partial.items():
            _merge_witness(found, key, cand)

    census = Census(k=k, classes=_classes_from(found))
    logger.info("census built: k=%s classes=%s", k, len(census.classes))
    return census


def load_or_build_census(
    k: int,
    *,
    storage: Optional[StorageProvider],
    runner: Optional[JobRunner] = None,
    settings: Optional[Settings] = None,
) -> Census:
    s = settings or get_settings()
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > s.census.max_k:
        raise CensusUnavailable(
            f"census for k={k} is above the configured cap CURVES_MAX_K={s.census.max_k}",
            required=k,
            limit=s.census.max_k,
        )

    if storage is not None:
        try:
            return load_census(storage, k)
        except KeyError:
            pass
        except ValueError as e:
            logger.warning("cached census k=%s rejected, rebuilding: %s", k, e)
            discard_census(storage, k)

    census = build_census(k, runner=runner, settings=s)
    if storage is not None:
        save_census(storage, census)
    return census


@lru_cache(maxsize=16)
def get_census(k: int) -> Census:
    p = get_providers()
    return load_or_build_census(int(k), storage=p.storage, runner=p.jobs, settings=p.settings)


# ---------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------

def constant_C(k: int, h: int = 0, census: Optional[Census] = None) -> Fraction:
    """C_{k,h} = sum of 1/|BAut| over RC_h(k)."""
    c = census if census is not None else get_census(k)
    return sum((Fraction(1, g.baut_order) for g in c.genus_classes(h)), Fraction(0))


def class_counts(census: Census) -> Dict[int, int]:
    return {h: len(v) for h, v in sorted(census.by_genus.items())}


def max_genus(k: int) -> int:
    return (k + 1) // 2
