from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Tuple

# ------------------------------------------
# Type aliases
# ------------------------------------------

Sign = Literal["+", "-"]

EMPTY_WORD_TEXT = "@"

# ------------------------------------------
# Signed Gauss word
# ------------------------------------------


@dataclass(frozen=True)
class GaussWord:
    """
    A signed double-occurrence word in first-occurrence order.

    word:  2k labels in 1..k, each exactly twice, label i+1 first appearing
           after label i.
    signs: k entries; signs[i] is the sign of label i+1 and records how the
           second visit crosses the first.
    """

    word: Tuple[int, ...]
    signs: Tuple[Sign, ...]

    def __post_init__(self) -> None:
        k = len(self.signs)
        if len(self.word) != 2 * k:
            raise ValueError(f"word of length {len(self.word)} needs {len(self.word) // 2} signs, got {k}")

        seen = [0] * (k + 1)
        next_label = 1
        for label in self.word:
            if not isinstance(label, int) or label < 1 or label > k:
                raise ValueError(f"label {label!r} outside 1..{k}")
            if label == next_label:
                next_label += 1
            elif label > next_label:
                raise ValueError("labels are not in first-occurrence order")
            seen[label] += 1
            if seen[label] > 2:
                raise ValueError(f"label {label} occurs more than twice")

        if any(c != 2 for c in seen[1:]):
            raise ValueError("every label must occur exactly twice")

        for s in self.signs:
            if s not in ("+", "-"):
                raise ValueError(f"sign {s!r} is neither + nor -")

    @property
    def k(self) -> int:
        return len(self.signs)

    def to_text(self) -> str:
        if not self.word:
            return EMPTY_WORD_TEXT
        return " ".join(str(x) for x in self.word) + " / " + "".join(self.signs)

    def sort_key(self) -> Tuple[Tuple[int, ...], Tuple[str, ...]]:
        return (self.word, self.signs)
