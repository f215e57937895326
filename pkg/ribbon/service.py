from __future__ import annotations

import logging
from typing import TYPE_CHECKING, List, Optional, Sequence, Set, Tuple

from ribbon.models import (
    ANNULUS,
    AutGroup,
    BoundarySet,
    CombinatorialMap,
    Permutation,
    RibbonGraphClass,
)

if TYPE_CHECKING:
    from gauss.models import GaussWord

logger = logging.getLogger(__name__)

# Darts per byte-width switch for the canonical encoding
_NARROW_MAX_DARTS = 256

_ANNULUS_SWAP: Tuple[Permutation, ...] = ((0, 1), (1, 0))


# ---------------------------------------------------------------------
# Boundaries / genus
# ---------------------------------------------------------------------

def trace_boundaries(m: CombinatorialMap) -> BoundarySet:
    """Faces are the cycles of phi = sigma . alpha (apply alpha, then sigma)."""
    if m.is_annulus:
        return BoundarySet(faces=((), ()), face_of=())

    n = m.dart_count
    face_of = [-1] * n
    faces: List[Tuple[int, ...]] = []
    for start in range(n):
        if face_of[start] >= 0:
            continue
        idx = len(faces)
        cycle = []
        d = start
        while face_of[d] < 0:
            face_of[d] = idx
            cycle.append(d)
            d = m.sigma[m.alpha[d]]
        faces.append(tuple(cycle))
    return BoundarySet(faces=tuple(faces), face_of=tuple(face_of))


def genus(m: CombinatorialMap, boundaries: Optional[BoundarySet] = None) -> int:
    if m.is_annulus:
        return 0
    b = (boundaries or trace_boundaries(m)).b
    twice = 2 - m.vertex_count + m.edge_count - b
    if twice < 0 or twice % 2:
        raise ValueError(f"inconsistent map: V={m.vertex_count} E={m.edge_count} b={b}")
    return twice // 2


# ---------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------

def _code_from(m: CombinatorialMap, root: int) -> Tuple[int, ...]:
    n = m.dart_count
    sigma, alpha = m.sigma, m.alpha
    label = [-1] * n
    label[root] = 0
    order = [root]
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for nxt in (sigma[d], alpha[d]):
            if label[nxt] < 0:
                label[nxt] = len(order)
                order.append(nxt)
    return tuple(label[sigma[d]] for d in order) + tuple(label[alpha[d]] for d in order)


def canonical_form(m: CombinatorialMap) -> bytes:
    """
    Isomorphism-invariant byte key.

    For every root dart the map is relabelled breadth-first (sigma before
    alpha) and encoded as (sigma', alpha'); the least encoding wins. Entries
    take one byte up to 256 darts, two bytes big-endian beyond.
    """
    if m.is_annulus:
        return b""

    best: Optional[Tuple[int, ...]] = None
    for root in range(m.dart_count):
        code = _code_from(m, root)
        if best is None or code < best:
            best = code

    assert best is not None
    if m.dart_count <= _NARROW_MAX_DARTS:
        return bytes(best)
    return b"".join(x.to_bytes(2, "big") for x in best)


def map_from_key(key: bytes) -> CombinatorialMap:
    if not key:
        return ANNULUS

    width = 1 if len(key) <= 2 * _NARROW_MAX_DARTS else 2
    if len(key) % (2 * width):
        raise ValueError(f"key length {len(key)} is not a valid encoding")
    values = [int.from_bytes(key[i:i + width], "big") for i in range(0, len(key), width)]
    n = len(values) // 2
    return CombinatorialMap(sigma=tuple(values[:n]), alpha=tuple(values[n:]))


def relabel_map(m: CombinatorialMap, permutation: Sequence[int]) -> CombinatorialMap:
    """Conjugate by the dart bijection d -> permutation[d]."""
    n = m.dart_count
    if sorted(permutation) != list(range(n)):
        raise ValueError("relabelling must be a permutation of the darts")
    sigma = [0] * n
    alpha = [0] * n
    for d in range(n):
        sigma[permutation[d]] = permutation[m.sigma[d]]
        alpha[permutation[d]] = permutation[m.alpha[d]]
    return CombinatorialMap(sigma=tuple(sigma), alpha=tuple(alpha))


# ---------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------

def _extend(m: CombinatorialMap, target: int) -> Optional[Permutation]:
    n = m.dart_count
    f = [-1] * n
    f[0] = target
    stack = [0]
    while stack:
        d = stack.pop()
        fd = f[d]
        for perm in (m.sigma, m.alpha):
            x = perm[d]
            y = perm[fd]
            if f[x] < 0:
                f[x] = y
                stack.append(x)
            elif f[x] != y:
                return None
    if len(set(f)) != n:
        return None
    return tuple(f)


def _boundary_action(elements: Sequence[Permutation], boundaries: BoundarySet) -> Tuple[Permutation, ...]:
    seen: Set[Permutation] = set()
    for f in elements:
        seen.add(tuple(boundaries.face_of[f[face[0]]] for face in boundaries.faces))
    return tuple(sorted(seen))


def automorphisms(m: CombinatorialMap, boundaries: Optional[BoundarySet] = None) -> AutGroup:
    """
    Orientation-preserving automorphisms.

    Connectivity makes an automorphism determined by the image of dart 0,
    so each candidate image is extended and checked once.
    """
    if m.is_annulus:
        return AutGroup(elements=(), boundary_action=_ANNULUS_SWAP, aut_order=2)

    bset = boundaries or trace_boundaries(m)
    elements = tuple(f for f in (_extend(m, t) for t in range(m.dart_count)) if f is not None)
    return AutGroup(
        elements=elements,
        boundary_action=_boundary_action(elements, bset),
        aut_order=len(elements),
    )


def boundary_automorphisms(m: CombinatorialMap) -> Tuple[Permutation, ...]:
    return automorphisms(m).boundary_action


# ---------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------

def classify_map(m: CombinatorialMap, witness: Optional["GaussWord"] = None) -> RibbonGraphClass:
    key = canonical_form(m)
    cm = map_from_key(key)
    bset = trace_boundaries(cm)
    aut = automorphisms(cm, bset)
    return RibbonGraphClass(
        canonical_key=key,
        k=cm.vertex_count,
        h=genus(cm, bset),
        b=bset.b,
        aut_order=aut.aut_order,
        baut=aut.boundary_action,
        witness=witness,
    )
