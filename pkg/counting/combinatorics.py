from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterator, Tuple

from sympy.functions.combinatorial.numbers import stirling
from sympy.utilities.iterables import multiset_partitions

SetPartition = Tuple[Tuple[int, ...], ...]


def binomial(top: int, bottom: int) -> int:
    """C(top, bottom), zero for negative arguments or bottom > top."""
    if top < 0 or bottom < 0 or bottom > top:
        return 0
    return comb(top, bottom)


def weak_compositions(s: int, r: int) -> int:
    """Ordered r-tuples of non-negative integers summing to s."""
    if r <= 0:
        return 1 if (r == 0 and s == 0) else 0
    if s < 0:
        return 0
    return comb(s + r - 1, r - 1)


def iter_weak_compositions(s: int, r: int) -> Iterator[Tuple[int, ...]]:
    """Stars and bars, in lexicographic order."""
    if r <= 0:
        if r == 0 and s == 0:
            yield ()
        return
    if s < 0:
        return
    for bars in combinations(range(s + r - 1), r - 1):
        prev = -1
        out = []
        for bar in bars:
            out.append(bar - prev - 1)
            prev = bar
        out.append(s + r - 2 - prev)
        yield tuple(out)


def stirling2(m: int, r: int) -> int:
    return int(stirling(m, r, kind=2))


@lru_cache(maxsize=32)
def set_partitions(b: int) -> Tuple[SetPartition, ...]:
    """All set partitions of {0..b-1}, parts sorted, partitions sorted."""
    if b <= 0:
        return ((),)
    out = {
        tuple(sorted(tuple(sorted(part)) for part in p))
        for p in multiset_partitions(list(range(b)))
    }
    return tuple(sorted(out, key=lambda p: (len(p), p)))


@lru_cache(maxsize=65536)
def constant_solutions(lengths: Tuple[int, ...], total: int) -> int:
    """
    Solutions of sum(lengths[i] * x_i) = total in non-negative integers.

    `lengths` should be passed sorted so equal multisets share a cache slot.
    """
    if total < 0:
        return 0
    ways = [1] + [0] * total
    for step in lengths:
        for i in range(step, total + 1):
            ways[i] += ways[i - step]
    return ways[total]


def partition_moebius(partition: SetPartition) -> int:
    """Moebius function from the finest partition up to `partition`."""
    out = 1
    for part in partition:
        size = len(part)
        out *= (-1) ** (size - 1) * factorial(size - 1)
    return out
