from __future__ import annotations

import logging
import re
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from gauss.models import EMPTY_WORD_TEXT, GaussWord, Sign
from ribbon.models import ANNULUS, CombinatorialMap

logger = logging.getLogger(__name__)

_LABEL_RE = re.compile(r"^[0-9]+$")


def _flip(s: str) -> str:
    return "-" if s == "+" else "+"


# ---------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------

def parse_gauss_word(text: str) -> GaussWord:
    """
    Parse "1 2 1 2 / +-" (or "@" for the empty word).

    Raw labels may be any positive integers; they are renumbered in
    first-occurrence order. The i-th sign belongs to the i-th distinct label
    met while reading the word.
    """
    raw = (text or "").strip()
    if raw == EMPTY_WORD_TEXT:
        return GaussWord(word=(), signs=())

    if raw.count("/") != 1:
        raise ValueError(f"expected 'labels / signs', got {text!r}")
    left, right = raw.split("/")

    tokens = left.split()
    if not tokens:
        raise ValueError("empty label list; use '@' for the empty word")

    renumber: Dict[str, int] = {}
    counts: Dict[str, int] = {}
    word: List[int] = []
    for tok in tokens:
        if not _LABEL_RE.match(tok) or int(tok) < 1:
            raise ValueError(f"malformed token {tok!r}")
        key = str(int(tok))
        if key not in renumber:
            renumber[key] = len(renumber) + 1
        counts[key] = counts.get(key, 0) + 1
        word.append(renumber[key])

    bad = sorted((lab for lab, c in counts.items() if c != 2), key=int)
    if bad:
        raise ValueError(f"labels must occur exactly twice: {', '.join(bad)}")

    sign_text = "".join(right.split())
    if len(sign_text) != len(renumber):
        raise ValueError(f"expected {len(renumber)} signs, got {len(sign_text)}")
    for ch in sign_text:
        if ch not in "+-":
            raise ValueError(f"sign {ch!r} is neither + nor -")

    return GaussWord(word=tuple(word), signs=tuple(sign_text))  # type: ignore[arg-type]


def format_gauss_word(w: GaussWord) -> str:
    return w.to_text()


# ---------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------

def _prefix_state(k: int, prefix: Sequence[int]) -> Tuple[List[int], List[int], int]:
    counts = [0] * (k + 1)
    next_label = 1
    for label in prefix:
        if label < 1 or label > k:
            raise ValueError(f"prefix label {label} outside 1..{k}")
        if label == next_label:
            next_label += 1
        elif label > next_label:
            raise ValueError("prefix is not in first-occurrence order")
        counts[label] += 1
        if counts[label] > 2:
            raise ValueError(f"prefix repeats label {label} more than twice")
    if len(prefix) > 2 * k:
        raise ValueError("prefix longer than the word")
    open_labels = [lab for lab in range(1, next_label) if counts[lab] == 1]
    return list(prefix), open_labels, next_label


def enumerate_double_occurrence_words(
    k: int, prefix: Sequence[int] = (), length: int | None = None
) -> Iterator[Tuple[int, ...]]:
    """
    Unsigned first-occurrence words of rank k in lexicographic order.

    At every position the candidates are the open labels (seen once) in
    increasing order, then the next unused label. `length` truncates the
    words (used for prefix sharding).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    target = 2 * k if length is None else min(int(length), 2 * k)
    word, open_labels, next_label = _prefix_state(k, prefix)
    if len(word) > target:
        return

    def _extend(next_label: int) -> Iterator[Tuple[int, ...]]:
        if len(word) == target:
            yield tuple(word)
            return
        for label in list(open_labels):
            open_labels.remove(label)
            word.append(label)
            yield from _extend(next_label)
            word.pop()
            open_labels.append(label)
            open_labels.sort()
        if next_label <= k:
            open_labels.append(next_label)
            word.append(next_label)
            yield from _extend(next_label + 1)
            word.pop()
            open_labels.pop()

    yield from _extend(next_label)


def enumerate_gauss_words(k: int, prefix: Sequence[int] = ()) -> Iterator[GaussWord]:
    """Every signed word of rank k (optionally starting with `prefix`), each once."""
    for word in enumerate_double_occurrence_words(k, prefix):
        for signs in product("+-", repeat=k):
            yield GaussWord(word=word, signs=signs)  # type: ignore[arg-type]


def gauss_word_prefixes(k: int, depth: int) -> List[Tuple[int, ...]]:
    return list(enumerate_double_occurrence_words(k, (), length=max(0, int(depth))))


def gauss_word_count(k: int) -> int:
    """(2k-1)!! * 2^k"""
    total = 1
    for odd in range(1, 2 * k, 2):
        total *= odd
    return total * (2 ** k)


# ---------------------------------------------------------------------
# Rotation / reversal
# ---------------------------------------------------------------------

def _occurrences(seq: Sequence[int]) -> Dict[int, Tuple[int, int]]:
    first: Dict[int, int] = {}
    occ: Dict[int, Tuple[int, int]] = {}
    for i, x in enumerate(seq):
        if x in first:
            occ[x] = (first[x], i)
        else:
            first[x] = i
    return occ


def _transform(
    word: Tuple[int, ...], signs: Tuple[str, ...], shift: int, reverse: bool
) -> Tuple[Tuple[int, ...], Tuple[str, ...]]:
    n = len(word)
    if n == 0:
        return word, signs
    seq = word[::-1] if reverse else word
    s = shift % n
    occ = _occurrences(seq)

    relabel: Dict[int, int] = {}
    new_word: List[int] = []
    new_signs: List[str] = []
    for i in range(n):
        x = seq[(i + s) % n]
        if x not in relabel:
            relabel[x] = len(relabel) + 1
            q1, q2 = occ[x]
            sg = signs[x - 1]
            if reverse ^ (q1 < s <= q2):
                sg = _flip(sg)
            new_signs.append(sg)
        new_word.append(relabel[x])
    return tuple(new_word), tuple(new_signs)


def rotate_gauss_word(w: GaussWord, shift: int = 1) -> GaussWord:
    """Move the basepoint `shift` letters forward."""
    word, signs = _transform(w.word, w.signs, shift, False)
    return GaussWord(word=word, signs=signs)  # type: ignore[arg-type]


def reverse_gauss_word(w: GaussWord) -> GaussWord:
    """Traverse the curve backwards; every crossing sign flips."""
    word, signs = _transform(w.word, w.signs, 0, True)
    return GaussWord(word=word, signs=signs)  # type: ignore[arg-type]


def word_is_dihedral_minimal(word: Tuple[int, ...], signs: Tuple[str, ...]) -> bool:
    n = len(word)
    if n == 0:
        return True

    for reverse, seq in ((False, word), (True, word[::-1])):
        occ = _occurrences(seq)
        for s in range(n):
            if not reverse and s == 0:
                continue

            relabel: Dict[int, int] = {}
            order: List[int] = []
            cmp = 0
            for i in range(n):
                x = seq[(i + s) % n]
                y = relabel.get(x)
                if y is None:
                    order.append(x)
                    y = len(order)
                    relabel[x] = y
                w = word[i]
                if y != w:
                    cmp = -1 if y < w else 1
                    break
            if cmp > 0:
                continue
            if cmp < 0:
                return False

            for j, x in enumerate(order):
                q1, q2 = occ[x]
                sg = signs[x - 1]
                if reverse ^ (q1 < s <= q2):
                    sg = _flip(sg)
                if sg != signs[j]:
                    if sg < signs[j]:
                        return False
                    break
    return True


def is_dihedral_minimal(w: GaussWord) -> bool:
    """True iff no rotation or reversal of `w` is lexicographically smaller."""
    return word_is_dihedral_minimal(w.word, w.signs)


# ---------------------------------------------------------------------
# Word -> map
# ---------------------------------------------------------------------

def build_map(word: Sequence[int], signs: Sequence[Sign]) -> CombinatorialMap:
    n = len(word)
    if n == 0:
        return ANNULUS

    darts = 2 * n
    sigma = tuple(d - d % 4 + (d % 4 + 1) % 4 for d in range(darts))

    incoming = [0] * n
    outgoing = [0] * n
    visited = [False] * (n // 2 + 1)
    for t, label in enumerate(word):
        base = 4 * (label - 1)
        if not visited[label]:
            visited[label] = True
            incoming[t], outgoing[t] = base, base + 2
        elif signs[label - 1] == "+":
            incoming[t], outgoing[t] = base + 1, base + 3
        else:
            incoming[t], outgoing[t] = base + 3, base + 1

    alpha = [0] * darts
    for t in range(n):
        a = outgoing[t]
        b = incoming[(t + 1) % n]
        alpha[a] = b
        alpha[b] = a

    return CombinatorialMap(sigma=sigma, alpha=tuple(alpha))


def word_to_map(w: GaussWord) -> CombinatorialMap:
    """
    Ribbon graph of the curve traced by `w`.

    Vertex v owns darts 4(v-1)..4(v-1)+3 counterclockwise. The first visit
    enters at slot 0 and leaves at slot 2; the second enters at 1 and leaves
    at 3 for '+', enters at 3 and leaves at 1 for '-'.
    """
    return build_map(w.word, w.signs)
