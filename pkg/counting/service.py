from __future__ import annotations

import logging
from itertools import product
from typing import FrozenSet, List, Mapping, Optional, Sequence, Tuple

from census.models import Census
from census.service import get_census
from core.settings import Settings, get_settings
from counting.combinatorics import (
    constant_solutions,
    iter_weak_compositions,
    partition_moebius,
    set_partitions,
    stirling2,
    weak_compositions,
)
from counting.models import COUNT_MODES, OrbitInvariant, OrbitStatistics, Signature
from ribbon.models import Permutation, RibbonGraphClass

logger = logging.getLogger(__name__)

Labelled = Tuple[Tuple[Tuple[int, ...], Signature], ...]

UNPUNCTURED_DISK = (0, 0)
PUNCTURED_DISK = (0, 1)


# ---------------------------------------------------------------------
# Input checks
# ---------------------------------------------------------------------

def _check(g: int, n: int, mode: str) -> None:
    if g < 0 or n < 0:
        raise ValueError(f"genus and punctures must be non-negative, got g={g} n={n}")
    if mode not in COUNT_MODES:
        raise ValueError(f"unknown count mode {mode!r}; expected one of {', '.join(COUNT_MODES)}")


def _forbidden(mode: str, exclude_punctured_disks: bool) -> FrozenSet[Tuple[int, int]]:
    """(g_i, n_i) values a single-face part may not take."""
    out = set()
    if mode == "no_disk":
        out.add(UNPUNCTURED_DISK)
    if exclude_punctured_disks:
        out.add(PUNCTURED_DISK)
    return frozenset(out)


def _complement_genus(graph: RibbonGraphClass, g: int, r: int) -> int:
    """Total genus the r glued surfaces must carry."""
    return g + r - graph.h - graph.b


# ---------------------------------------------------------------------
# Ordered count
# ---------------------------------------------------------------------

def closed_form_ordered_count(graph: RibbonGraphClass, g: int, n: int) -> int:
    """Number of valid (P, S) pairs before quotienting by BAut."""
    _check(g, n, "iso")
    b = graph.b
    total = 0
    for r in range(1, b + 1):
        total += (
            stirling2(b, r)
            * weak_compositions(_complement_genus(graph, g, r), r)
            * weak_compositions(n, r)
        )
    return total


# ---------------------------------------------------------------------
# Explicit orbit reduction
# ---------------------------------------------------------------------

def _act(pi: Permutation, labelled: Labelled) -> Labelled:
    return tuple(sorted((tuple(sorted(pi[x] for x in part)), sig) for part, sig in labelled))


def enumerate_orbit_invariants(
    graph: RibbonGraphClass,
    g: int,
    n: int,
    mode: str = "iso",
    exclude_punctured_disks: bool = False,
) -> List[OrbitInvariant]:
    """One least representative per BAut-orbit of valid (P, S)."""
    _check(g, n, mode)
    forbidden = _forbidden(mode, exclude_punctured_disks)
    perms = [pi for pi in graph.baut if list(pi) != sorted(pi)]

    out: List[OrbitInvariant] = []
    for parts in set_partitions(graph.b):
        r = len(parts)
        genus_total = _complement_genus(graph, g, r)
        if genus_total < 0:
            continue
        sizes = [len(p) for p in parts]
        for gs in iter_weak_compositions(genus_total, r):
            for ns in iter_weak_compositions(n, r):
                sigs = tuple((gs[i], ns[i], sizes[i]) for i in range(r))
                if forbidden and any(s[2] == 1 and (s[0], s[1]) in forbidden for s in sigs):
                    continue
                labelled: Labelled = tuple(zip(parts, sigs))
                if all(_act(pi, labelled) >= labelled for pi in perms):
                    out.append(OrbitInvariant(graph=graph, parts=parts, signatures=sigs))

    out.sort(key=lambda o: (o.r, o.parts, o.signatures))
    return out


# ---------------------------------------------------------------------
# Fixed-point (Burnside) count
# ---------------------------------------------------------------------

def _part_cycles(pi: Permutation, parts: Sequence[Tuple[int, ...]]) -> Optional[List[Tuple[int, int]]]:
    """(cycle length, part size) for each cycle of pi on the parts, None if pi moves P."""
    index = {p: i for i, p in enumerate(parts)}
    image = []
    for p in parts:
        q = tuple(sorted(pi[x] for x in p))
        j = index.get(q)
        if j is None:
            return None
        image.append(j)

    seen = [False] * len(parts)
    cycles: List[Tuple[int, int]] = []
    for i in range(len(parts)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = image[j]
            length += 1
        cycles.append((length, len(parts[i])))
    return cycles


def _fixed_assignments(
    cycles: Sequence[Tuple[int, int]],
    genus_total: int,
    punctures: int,
    forbidden: FrozenSet[Tuple[int, int]],
) -> int:
    """
    Signature assignments constant on every cycle.

    Single-face cycles that may hit a forbidden value are handled by
    inclusion-exclusion: each is either free or pinned to a forbidden value
    with a sign flip.
    """
    pinned_choices = tuple(sorted(forbidden))
    constrained = [c for c in cycles if forbidden and c[1] == 1]
    free_lengths = [c[0] for c in cycles if not (forbidden and c[1] == 1)]

    total = 0
    for choice in product((None,) + pinned_choices, repeat=len(constrained)):
        lengths = list(free_lengths)
        g_left = genus_total
        n_left = punctures
        sign = 1
        for (length, _), value in zip(constrained, choice):
            if value is None:
                lengths.append(length)
            else:
                g_left -= length * value[0]
                n_left -= length * value[1]
                sign = -sign
        if g_left < 0 or n_left < 0:
            continue
        key = tuple(sorted(lengths))
        total += sign * constant_solutions(key, g_left) * constant_solutions(key, n_left)
    return total


def burnside_count(
    graph: RibbonGraphClass,
    g: int,
    n: int,
    mode: str = "iso",
    exclude_punctured_disks: bool = False,
) -> int:
    """Orbit count as the average number of fixed (P, S) over BAut."""
    _check(g, n, mode)
    forbidden = _forbidden(mode, exclude_punctured_disks)

    total = 0
    for pi in graph.baut:
        for parts in set_partitions(graph.b):
            genus_total = _complement_genus(graph, g, len(parts))
            if genus_total < 0:
                continue
            cycles = _part_cycles(pi, parts)
            if cycles is None:
                continue
            total += _fixed_assignments(cycles, genus_total, n, forbidden)

    orbits, rem = divmod(total, graph.baut_order)
    if rem:
        raise RuntimeError(f"fixed-point total {total} not divisible by |BAut|={graph.baut_order}")
    return orbits


# ---------------------------------------------------------------------
# Orbit counts
# ---------------------------------------------------------------------

def count_embeddings(
    graph: RibbonGraphClass,
    g: int,
    n: int,
    mode: str = "iso",
    exclude_punctured_disks: bool = False,
    settings: Optional[Settings] = None,
) -> int:
    """Number of MCG orbits whose ribbon graph is `graph`."""
    _check(g, n, mode)
    plain = mode == "iso" and not exclude_punctured_disks

    if graph.baut_order == 1:
        if plain:
            return closed_form_ordered_count(graph, g, n)
        return burnside_count(graph, g, n, mode, exclude_punctured_disks)

    s = settings or get_settings()
    if closed_form_ordered_count(graph, g, n) <= s.counting.orbit_enumeration_limit:
        return len(enumerate_orbit_invariants(graph, g, n, mode, exclude_punctured_disks))
    return burnside_count(graph, g, n, mode, exclude_punctured_disks)


def _census_for(k: int, census: Optional[Census]) -> Census:
    if census is None:
        return get_census(k)
    if census.k != k:
        raise ValueError(f"census holds k={census.k}, expected k={k}")
    return census


def count_orbits_total(
    k: int,
    h: int,
    g: int,
    n: int,
    mode: str = "iso",
    census: Optional[Census] = None,
    exclude_punctured_disks: bool = False,
) -> int:
    """Sum of count_embeddings over RC_h(k)."""
    _check(g, n, mode)
    c = _census_for(k, census)
    total = sum(count_embeddings(graph, g, n, mode, exclude_punctured_disks) for graph in c.genus_classes(h))
    logger.debug("orbits: k=%s h=%s g=%s n=%s mode=%s -> %s", k, h, g, n, mode, total)
    return total


def count_orbits_upto(
    k: int,
    g: int,
    n: int,
    mode: str = "iso",
    censuses: Optional[Mapping[int, Census]] = None,
    exclude_punctured_disks: bool = False,
) -> int:
    """Orbits of curves with at most k self-intersections, every ribbon genus."""
    _check(g, n, mode)
    total = 0
    for kk in range(k + 1):
        c = _census_for(kk, (censuses or {}).get(kk))
        for graph in c.classes:
            total += count_embeddings(graph, g, n, mode, exclude_punctured_disks)
    return total


def count_disk_gluings(graph: RibbonGraphClass, g: int, n: int) -> int:
    """Orbits in which some face bounds an unpunctured disk."""
    return count_embeddings(graph, g, n, "iso") - count_embeddings(graph, g, n, "no_disk")


def distinct_signature_ordered(graph: RibbonGraphClass, g: int, n: int) -> int:
    """
    Ordered gluings with one part per face and pairwise distinct signatures.

    Moebius inversion over set partitions: a partition forces equal
    signatures inside each block.
    """
    _check(g, n, "iso")
    genus_total = _complement_genus(graph, g, graph.b)
    if genus_total < 0:
        return 0
    total = 0
    for blocks in set_partitions(graph.b):
        sizes = tuple(sorted(len(p) for p in blocks))
        total += (
            partition_moebius(blocks)
            * constant_solutions(sizes, genus_total)
            * constant_solutions(sizes, n)
        )
    return total


def count_repeated_signature_gluings(graph: RibbonGraphClass, g: int, n: int) -> int:
    """Ordered one-part-per-face gluings in which two faces share a signature."""
    b = graph.b
    genus_total = _complement_genus(graph, g, b)
    everything = weak_compositions(genus_total, b) * weak_compositions(n, b)
    return everything - distinct_signature_ordered(graph, g, n)


# ---------------------------------------------------------------------
# Finite-size statistics
# ---------------------------------------------------------------------

def orbit_statistics(k: int, g: int, n: int, census: Optional[Census] = None) -> OrbitStatistics:
    _check(g, n, "iso")
    c = _census_for(k, census)

    orbits = 0
    disk = 0
    distinct = 0
    for graph in c.classes:
        iso = count_embeddings(graph, g, n, "iso")
        orbits += iso
        disk += iso - count_embeddings(graph, g, n, "no_disk")
        if graph.h == 0:
            # BAut acts freely on assignments with pairwise distinct signatures
            ordered = distinct_signature_ordered(graph, g, n)
            q, rem = divmod(ordered, graph.baut_order)
            if rem:
                raise RuntimeError(f"distinct-signature count {ordered} not divisible by {graph.baut_order}")
            distinct += q

    return OrbitStatistics(k=k, g=g, n=n, orbits=orbits, disk_orbits=disk, distinct_orbits=distinct)
