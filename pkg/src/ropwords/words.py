"""Basic operations on finite words.

A word is a tuple of small non-negative integers.  Rhythms use letters
from ``{2, 3}`` or ``{1, ..., s}``; binary necklaces use ``{0, 1}``.
Public functions also accept digit strings such as ``"2233"``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

Word = tuple[int, ...]
WordLike = Union[str, Sequence[int]]

DIGITS = frozenset(range(10))


def parse_word(text: str, alphabet: Iterable[int] | None = None) -> Word:
    """Parse a digit string into a word, optionally restricting the alphabet."""
    text = text.strip()
    if not all(c in "0123456789" for c in text):
        raise ValueError(f"not a digit string: {text!r}")
    w = tuple(int(c) for c in text)
    if alphabet is not None:
        check_alphabet(w, alphabet)
    return w


def as_word(w: WordLike) -> Word:
    if isinstance(w, str):
        return parse_word(w)
    w = tuple(w)
    for a in w:
        if not isinstance(a, int) or a not in DIGITS:
            raise ValueError(f"invalid letter {a!r}")
    return w


def check_alphabet(w: Word, alphabet: Iterable[int]) -> None:
    allowed = set(alphabet)
    bad = sorted(set(w) - allowed)
    if bad:
        raise ValueError(
            f"letters {bad} outside alphabet {sorted(allowed)} in {word_str(w)!r}"
        )


def word_str(w: Sequence[int]) -> str:
    return "".join(map(str, w))


def height(w: WordLike) -> int:
    return sum(as_word(w))


def rotate(w: WordLike, k: int) -> Word:
    """Move the first ``k`` letters to the end (k-fold left rotation)."""
    w = as_word(w)
    if not w:
        return w
    k %= len(w)
    return w[k:] + w[:k]


def rotations(w: WordLike) -> list[Word]:
    w = as_word(w)
    return [w[i:] + w[:i] for i in range(len(w))] or [w]


def least_rotation_scan(w: WordLike) -> Word:
    return min(rotations(w))


def least_rotation_index(w: Sequence[int]) -> int:
    """Booth's algorithm: start index of the least rotation, in linear time."""
    s = list(w) * 2
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            # here i == -1
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def least_rotation(w: WordLike) -> Word:
    w = as_word(w)
    if not w:
        return w
    k = least_rotation_index(w)
    return w[k:] + w[:k]


def period(w: WordLike) -> int:
    """Smallest p dividing len(w) such that w is a power of its length-p prefix."""
    w = as_word(w)
    n = len(w)
    if n == 0:
        raise ValueError("period of the empty word is undefined")
    for p in range(1, n + 1):
        if n % p == 0 and w[p:] + w[:p] == w:
            return p
    raise AssertionError("unreachable")


def is_lyndon(w: WordLike) -> bool:
    w = as_word(w)
    return len(w) > 0 and all(w < w[i:] + w[:i] for i in range(1, len(w)))


def is_necklace_rep(w: Word) -> bool:
    """True when ``w`` is the least of its rotations.  No validation; hot loop."""
    return all(w <= w[i:] + w[:i] for i in range(1, len(w)))


def step_read(w: WordLike, p: int) -> Word:
    """Read ``w`` cyclically by stride ``p``: ``x[j] = w[j*p mod n]``."""
    w = as_word(w)
    n = len(w)
    if n == 0:
        return w
    if math.gcd(p, n) != 1:
        raise ValueError(f"step {p} is not coprime with length {n}")
    return tuple(w[(j * p) % n] for j in range(n))


def step_unread(x: WordLike, p: int) -> Word:
    """Inverse of :func:`step_read`: place ``x[j]`` at position ``j*p mod n``."""
    x = as_word(x)
    n = len(x)
    if n == 0:
        return x
    if math.gcd(p, n) != 1:
        raise ValueError(f"step {p} is not coprime with length {n}")
    out = [0] * n
    for j, a in enumerate(x):
        out[(j * p) % n] = a
    return tuple(out)


def letter_counts(w: WordLike) -> dict[int, int]:
    return dict(sorted(Counter(as_word(w)).items()))


@dataclass(frozen=True, order=True)
class CyclicClass:
    """A rotation class, stored by its least rotation."""

    representative: Word

    @classmethod
    def of(cls, w: WordLike, **kwargs) -> "CyclicClass":
        return cls(least_rotation(w), **kwargs)

    @property
    def length(self) -> int:
        return len(self.representative)

    @property
    def period(self) -> int:
        return period(self.representative)

    @property
    def lyndon(self) -> bool:
        return len(self.representative) > 0 and self.period == self.length

    @property
    def counts(self) -> dict[int, int]:
        return letter_counts(self.representative)

    def __str__(self) -> str:
        return word_str(self.representative)
