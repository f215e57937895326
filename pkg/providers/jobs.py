from __future__ import annotations

from typing import Callable, Iterable, Iterator, Protocol, TypeVar, runtime_checkable

T = TypeVar("T")
R = TypeVar("R")


@runtime_checkable
class JobRunner(Protocol):
    """
    Fan-out execution abstraction.

    `fn` must be a module-level function so that process-based runners can
    pickle it. Results come back in input order.
    """

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> Iterator[R]: ...
