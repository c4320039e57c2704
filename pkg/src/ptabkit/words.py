"""Crystal operators on words and biwords (Kashiwara convention).

Raising and lowering are driven by the prefix/suffix counts ``ce`` and
``cf``; :func:`signature` exposes them so the choice of letter can be
inspected.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple

from .errors import IndexOutOfRange, InternalInconsistency, ParseError, StandardFormBroken

Word = Tuple[int, ...]


class Direction(str, Enum):
    RAISE = "e"
    LOWER = "f"


RAISE = Direction.RAISE
LOWER = Direction.LOWER


@dataclass(frozen=True)
class WordSignature:
    i: int
    ce: Tuple[int, ...]
    cf: Tuple[int, ...]
    eps: int
    phi: int
    e_pos: Optional[int]  # 1-based; None for the empty word
    f_pos: Optional[int]


def _check_index(i, n):
    if i < 1 or (n is not None and i >= n):
        hi = "n-1" if n is None else str(n - 1)
        raise IndexOutOfRange(f"operator index {i} outside 1..{hi}")


def signature(word: Sequence[int], i: int, n: Optional[int] = None) -> WordSignature:
    _check_index(i, n)
    k = len(word)
    up = [1 if s == i + 1 else 0 for s in word]
    down = [1 if s == i else 0 for s in word]
    ce = []
    total_up = total_down = 0
    for j in range(k):
        total_up += up[j]
        ce.append(total_up - total_down)
        total_down += down[j]
    cf = [0] * k
    total_up = total_down = 0
    for j in range(k - 1, -1, -1):
        total_down += down[j]
        cf[j] = total_down - total_up
        total_up += up[j]
    eps = max(ce, default=0)
    phi = max(cf, default=0)
    e_pos = ce.index(eps) + 1 if k else None
    f_pos = k - cf[::-1].index(phi) if k else None
    return WordSignature(i, tuple(ce), tuple(cf), eps, phi, e_pos, f_pos)


def crystal_word(word: Sequence[int], i: int, direction, n: Optional[int] = None) -> Optional[Word]:
    """Apply ``e_i`` (RAISE) or ``f_i`` (LOWER) to a word; None means NULL."""
    direction = Direction(direction)
    sig = signature(word, i, n)
    word = list(word)
    if direction is RAISE:
        if sig.eps == 0:
            return None
        j = sig.e_pos - 1
        if word[j] != i + 1:
            raise InternalInconsistency(f"e_{i} selected letter {word[j]} at position {j + 1}")
        word[j] = i
    else:
        if sig.phi == 0:
            return None
        j = sig.f_pos - 1
        if word[j] != i:
            raise InternalInconsistency(f"f_{i} selected letter {word[j]} at position {j + 1}")
        word[j] = i + 1
    return tuple(word)


def word_weight(word: Sequence[int], n: int) -> Tuple[int, ...]:
    parts = [0] * n
    for s in word:
        parts[s - 1] += 1
    return tuple(parts)


def format_word(word: Sequence[int]) -> str:
    if all(1 <= s <= 9 for s in word):
        return "".join(str(s) for s in word)
    return " ".join(str(s) for s in word)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    toks = text.split() if " " in text else list(text)
    try:
        word = tuple(int(t) for t in toks)
    except ValueError:
        raise ParseError(f"not a word: {text!r}") from None
    if any(s < 1 for s in word):
        raise ParseError(f"letters must be positive: {text!r}")
    return word


@dataclass(frozen=True)
class Biword:
    """Two-line array ``top`` over ``bottom`` (tau over omega)."""

    top: Word
    bottom: Word

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError("biword rows have different lengths")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "Biword":
        return standardize(pairs)

    @property
    def pairs(self):
        return list(zip(self.top, self.bottom))

    def __len__(self):
        return len(self.top)

    def __str__(self):
        return format_biword(self)

    def is_standard(self) -> bool:
        return all(
            t1 < t2 or (t1 == t2 and w1 >= w2)
            for (t1, w1), (t2, w2) in zip(self.pairs, self.pairs[1:])
        )

    def prefix(self, length: int) -> "Biword":
        return Biword(self.top[:length], self.bottom[:length])


def standardize(pairs: Iterable[Tuple[int, int]]) -> Biword:
    ordered = sorted(pairs, key=lambda p: (p[0], -p[1]))
    return Biword(tuple(t for t, _ in ordered), tuple(w for _, w in ordered))


def crystal_biword(b: Biword, i: int, direction, n: Optional[int] = None) -> Optional[Biword]:
    bottom = crystal_word(b.bottom, i, direction, n)
    if bottom is None:
        return None
    out = Biword(b.top, bottom)
    if not out.is_standard():
        raise StandardFormBroken(f"{direction}_{i} broke standard form of {b}")
    return out


def dual_biword(b: Biword) -> Biword:
    return standardize((w, t) for t, w in b.pairs)


def format_biword(b: Biword) -> str:
    return f"{format_word(b.top)}/{format_word(b.bottom)}"


def parse_biword(text: str) -> Biword:
    if text.count("/") != 1:
        raise ParseError(f"a biword is written 'top/bottom', got {text.strip()!r}")
    top, bottom = (parse_word(part) for part in text.split("/"))
    if len(top) != len(bottom):
        raise ParseError("biword rows have different lengths")
    b = Biword(top, bottom)
    if not b.is_standard():
        raise ParseError(f"biword {text.strip()!r} is not in standard form")
    return b
