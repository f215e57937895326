from __future__ import annotations

from typing import Callable, Iterable, Iterator, TypeVar

from providers.jobs import JobRunner

T = TypeVar("T")
R = TypeVar("R")


class LocalInlineJobRunner(JobRunner):
    """Runs every item in the calling process, one after another."""

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> Iterator[R]:
        for item in items:
            yield fn(item)
