from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Tuple

if TYPE_CHECKING:
    from gauss.models import GaussWord

Permutation = Tuple[int, ...]

# ------------------------------------------
# Combinatorial map
# ------------------------------------------


@dataclass(frozen=True)
class CombinatorialMap:
    """
    A connected 4-valent ribbon graph on darts 0..n-1.

    sigma: rotation around vertices, every cycle of length 4
    alpha: fixed-point-free involution pairing darts into edges

    The map with no darts stands for the annulus (neighbourhood of a simple
    curve); it has no vertices and two boundary components.
    """

    sigma: Permutation
    alpha: Permutation

    def __post_init__(self) -> None:
        n = len(self.sigma)
        if len(self.alpha) != n:
            raise ValueError("sigma and alpha act on different dart sets")
        if n % 4:
            raise ValueError(f"dart count {n} is not a multiple of 4")
        if n == 0:
            return

        if sorted(self.sigma) != list(range(n)) or sorted(self.alpha) != list(range(n)):
            raise ValueError("sigma and alpha must be permutations of 0..n-1")

        for d in range(n):
            a = self.alpha[d]
            if a == d or self.alpha[a] != d:
                raise ValueError(f"alpha is not a fixed-point-free involution at dart {d}")

        seen = [False] * n
        for d in range(n):
            if seen[d]:
                continue
            length = 0
            x = d
            while not seen[x]:
                seen[x] = True
                x = self.sigma[x]
                length += 1
            if length != 4:
                raise ValueError(f"vertex through dart {d} has valence {length}, expected 4")

        reached = [False] * n
        reached[0] = True
        stack = [0]
        while stack:
            d = stack.pop()
            for nxt in (self.sigma[d], self.alpha[d]):
                if not reached[nxt]:
                    reached[nxt] = True
                    stack.append(nxt)
        if not all(reached):
            raise ValueError("map is not connected")

    @property
    def dart_count(self) -> int:
        return len(self.sigma)

    @property
    def vertex_count(self) -> int:
        return len(self.sigma) // 4

    @property
    def edge_count(self) -> int:
        return len(self.sigma) // 2

    @property
    def is_annulus(self) -> bool:
        return not self.sigma


ANNULUS = CombinatorialMap(sigma=(), alpha=())


# ------------------------------------------
# Derived structures
# ------------------------------------------


@dataclass(frozen=True)
class BoundarySet:
    # each face starts at its least dart; faces ordered by that dart
    faces: Tuple[Tuple[int, ...], ...]
    face_of: Tuple[int, ...]

    @property
    def b(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class AutGroup:
    elements: Tuple[Permutation, ...]
    boundary_action: Tuple[Permutation, ...]
    aut_order: int

    @property
    def baut_order(self) -> int:
        return len(self.boundary_action)


@dataclass(frozen=True)
class RibbonGraphClass:
    """
    One isomorphism class of curve ribbon graphs.

    Face indices used by `baut` refer to the faces of
    `map_from_key(canonical_key)`.
    """

    canonical_key: bytes
    k: int
    h: int
    b: int
    aut_order: int
    baut: Tuple[Permutation, ...]
    witness: Optional["GaussWord"] = None

    @property
    def baut_order(self) -> int:
        return len(self.baut)

    @property
    def key_hex(self) -> str:
        return self.canonical_key.hex()
