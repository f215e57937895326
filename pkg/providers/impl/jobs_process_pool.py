from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

from providers.jobs import JobRunner

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class ProcessPoolJobRunner(JobRunner):
    """Spreads items over worker processes; results keep input order."""

    def __init__(self, workers: int) -> None:
        self.workers = max(1, int(workers))

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> Iterator[R]:
        batch = list(items)
        logger.info("process pool: workers=%s items=%s", self.workers, len(batch))
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            yield from pool.map(fn, batch, chunksize=1)
