from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache


def _env(name: str, default: str = "") -> str:
    v = os.getenv(name)
    return default if v is None else str(v)


def _env_int(name: str, default: int) -> int:
    raw = _env(name, "")
    if not raw.strip():
        return default
    try:
        return int(raw)
    except Exception:
        return default


# ---------------------------------------------------------------------
# Settings models
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class CensusSettings:
    max_k: int
    word_budget: int
    shard_depth: int


@dataclass(frozen=True)
class StorageSettings:
    """
    Census cache configuration.

    provider:
      - "none"   -> censuses are rebuilt per process
      - "local"  -> LocalFilesStorageProvider rooted at local_dir
    """
    provider: str

    local_dir: str = "./data"


@dataclass(frozen=True)
class JobsSettings:
    threads: int


@dataclass(frozen=True)
class CountingSettings:
    orbit_enumeration_limit: int


@dataclass(frozen=True)
class LoggingSettings:
    level: str


@dataclass(frozen=True)
class Settings:
    census: CensusSettings
    storage: StorageSettings
    jobs: JobsSettings
    counting: CountingSettings
    logging: LoggingSettings


# ---------------------------------------------------------------------
# Loaders
# ---------------------------------------------------------------------

def _load_census_settings() -> CensusSettings:
    max_k = _env_int("CURVES_MAX_K", 8)
    word_budget = _env_int("CURVES_WORD_BUDGET", 600_000_000)
    shard_depth = _env_int("CURVES_SHARD_DEPTH", 4)

    max_k = max(0, min(int(max_k), 12))
    word_budget = max(1, int(word_budget))
    shard_depth = max(1, min(int(shard_depth), 8))

    return CensusSettings(max_k=max_k, word_budget=word_budget, shard_depth=shard_depth)


def _normalize_storage_provider(raw: str) -> str:
    v = (raw or "").strip().lower()
    if v in ("none", "local"):
        return v
    return "none"


def _load_storage_settings() -> StorageSettings:
    """
    Storage precedence (keep this order):
      1) CURVES_STORAGE_MODE  <-- must win
      2) CURVES_CENSUS_DIR set -> local
      3) default none
    """
    raw_mode = (_env("CURVES_STORAGE_MODE", "") or "").strip()
    local_dir = (_env("CURVES_CENSUS_DIR", "") or "").strip()

    if raw_mode:
        provider = _normalize_storage_provider(raw_mode)
    elif local_dir:
        provider = "local"
    else:
        provider = "none"

    return StorageSettings(provider=provider, local_dir=local_dir or "./data")


def _load_jobs_settings() -> JobsSettings:
    threads = _env_int("CURVES_THREADS", 1)
    return JobsSettings(threads=max(1, min(int(threads), 256)))


def _load_counting_settings() -> CountingSettings:
    limit = _env_int("CURVES_ORBIT_ENUM_LIMIT", 20_000)
    return CountingSettings(orbit_enumeration_limit=max(0, int(limit)))


def _load_logging_settings() -> LoggingSettings:
    level = (_env("CURVES_LOG_LEVEL", "") or "WARNING").strip().upper()
    if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        level = "WARNING"
    return LoggingSettings(level=level)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings(
        census=_load_census_settings(),
        storage=_load_storage_settings(),
        jobs=_load_jobs_settings(),
        counting=_load_counting_settings(),
        logging=_load_logging_settings(),
    )
