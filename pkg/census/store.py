# census/store.py
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

from census.models import Census, CensusClassRecord, CensusHeaderRecord
from core.config import CENSUS_FORMAT_VERSION, TOOL_NAME, TOOL_VERSION, census_key
from gauss.service import parse_gauss_word, word_to_map
from providers.storage import StorageProvider
from ribbon.models import RibbonGraphClass
from ribbon.service import canonical_form, classify_map, map_from_key

logger = logging.getLogger(__name__)


def class_record(c: RibbonGraphClass) -> CensusClassRecord:
    return CensusClassRecord(
        k=c.k,
        h=c.h,
        b=c.b,
        aut=c.aut_order,
        baut=c.baut_order,
        key=c.key_hex,
        word=c.witness.to_text() if c.witness is not None else "",
    )


def census_to_jsonl(census: Census) -> str:
    header = CensusHeaderRecord(
        k=census.k,
        tool=TOOL_NAME,
        version=TOOL_VERSION,
        format=CENSUS_FORMAT_VERSION,
        classes=len(census.classes),
    )
    lines = [header.model_dump_json()]
    lines.extend(class_record(c).model_dump_json() for c in census.classes)
    return "\n".join(lines) + "\n"


def _validated_class(rec: CensusClassRecord, k: int, lineno: int) -> RibbonGraphClass:
    """Rebuild a class from its key and witness; cached numbers are checked, not trusted."""
    where = f"census line {lineno}"
    try:
        key = bytes.fromhex(rec.key)
    except ValueError as e:
        raise ValueError(f"{where}: key is not hex") from e

    witness = parse_gauss_word(rec.word)
    cls = classify_map(map_from_key(key), witness=witness)

    if cls.canonical_key != key:
        raise ValueError(f"{where}: key is not canonical")
    if canonical_form(word_to_map(witness)) != key:
        raise ValueError(f"{where}: witness word does not produce the stored key")

    if rec.k != k:
        raise ValueError(f"{where}: record k={rec.k} inside a k={k} census")
    expected = (cls.k, cls.h, cls.b, cls.aut_order, cls.baut_order)
    stored = (rec.k, rec.h, rec.b, rec.aut, rec.baut)
    if stored != expected:
        raise ValueError(f"{where}: stored invariants {stored} disagree with recomputed {expected}")
    return cls


def census_from_jsonl(text: str, expected_k: Optional[int] = None) -> Census:
    rows = [(i + 1, line) for i, line in enumerate(text.splitlines()) if line.strip()]
    if not rows:
        raise ValueError("census file is empty")

    try:
        header = CensusHeaderRecord.model_validate(json.loads(rows[0][1]))
    except (ValidationError, json.JSONDecodeError) as e:
        raise ValueError(f"census header is malformed: {e}") from e

    if header.format != CENSUS_FORMAT_VERSION:
        raise ValueError(f"census format {header.format} is not supported (expected {CENSUS_FORMAT_VERSION})")
    if expected_k is not None and header.k != int(expected_k):
        raise ValueError(f"census holds k={header.k}, expected k={expected_k}")

    classes: List[RibbonGraphClass] = []
    seen = set()
    for lineno, line in rows[1:]:
        try:
            rec = CensusClassRecord.model_validate(json.loads(line))
        except (ValidationError, json.JSONDecodeError) as e:
            raise ValueError(f"census line {lineno} is malformed: {e}") from e
        cls = _validated_class(rec, header.k, lineno)
        if cls.canonical_key in seen:
            raise ValueError(f"census line {lineno}: duplicate key {rec.key}")
        seen.add(cls.canonical_key)
        classes.append(cls)

    if len(classes) != header.classes:
        raise ValueError(f"census header announces {header.classes} classes, found {len(classes)}")

    classes.sort(key=lambda c: (c.h, c.canonical_key))
    return Census(k=header.k, classes=tuple(classes))


# ---------------------------------------------------------------------
# Storage-backed cache
# ---------------------------------------------------------------------

def save_census(storage: StorageProvider, census: Census) -> None:
    storage.put_object(census_key(census.k), census_to_jsonl(census).encode("utf-8"))
    logger.info("census saved: k=%s classes=%s", census.k, len(census.classes))


def load_census(storage: StorageProvider, k: int) -> Census:
    """Raises KeyError when nothing is cached for k."""
    raw = storage.get_object(census_key(k))
    return census_from_jsonl(raw.decode("utf-8"), expected_k=k)


def discard_census(storage: StorageProvider, k: int) -> None:
    storage.delete_object(census_key(k))
    logger.info("census discarded: k=%s", k)


# ---------------------------------------------------------------------
# Explicit files (--census-file / --out)
# ---------------------------------------------------------------------

def read_census_file(path: Union[str, Path], expected_k: Optional[int] = None) -> Census:
    p = Path(path)
    if not p.is_file():
        raise FileNotFoundError(f"census file not found: {p}")
    return census_from_jsonl(p.read_text(encoding="utf-8"), expected_k=expected_k)


def write_census_file(path: Union[str, Path], census: Census) -> None:
    p = Path(path)
    if p.parent and not p.parent.exists():
        p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(census_to_jsonl(census), encoding="utf-8")
