from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from core.settings import get_settings, Settings

from providers.storage import StorageProvider
from providers.jobs import JobRunner

from providers.impl.storage_local_files import LocalFilesStorageProvider
from providers.impl.jobs_local_inline import LocalInlineJobRunner
from providers.impl.jobs_process_pool import ProcessPoolJobRunner

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Providers:
    settings: Settings
    storage: Optional[StorageProvider]  # None -> censuses are not cached
    jobs: JobRunner


def _build_storage(settings: Settings) -> Optional[StorageProvider]:
    provider = (settings.storage.provider or "none").strip().lower()

    if provider == "none":
        return None

    if provider == "local":
        return LocalFilesStorageProvider(settings.storage.local_dir)

    raise RuntimeError(f"Unsupported storage provider: {provider}")


def build_job_runner(threads: int) -> JobRunner:
    if int(threads) <= 1:
        return LocalInlineJobRunner()
    return ProcessPoolJobRunner(workers=int(threads))


def _build_jobs(settings: Settings) -> JobRunner:
    return build_job_runner(settings.jobs.threads)


@lru_cache(maxsize=1)
def get_providers() -> Providers:
    s = get_settings()
    providers = Providers(
        settings=s,
        storage=_build_storage(s),
        jobs=_build_jobs(s),
    )
    logger.debug("providers: storage=%s threads=%s", s.storage.provider, s.jobs.threads)
    return providers
