"""Generation of Lyndon words, binary necklaces, and rop / s-rop / s-rap classes.

Brute-force generators walk every word in lexicographic order and keep the
ones that are least in their rotation class, so representatives come out
already sorted.  Each ``iter_*`` function streams; the list variants
materialize.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .bijection import BinaryNecklace, RopClass, necklace_to_rop
from .predicates import _split_exists
from .words import CyclicClass, Word, is_lyndon, is_necklace_rep

# Default brute-force ceilings on word length, by alphabet size.
BRUTE_CEILING = {2: 21, 3: 13}


def brute_ceiling(alphabet_size: int) -> int:
    if alphabet_size in BRUTE_CEILING:
        return BRUTE_CEILING[alphabet_size]
    n = 1
    while alphabet_size ** (n + 1) <= 2**21:
        n += 1
    return n


def check_ceiling(n: int, alphabet_size: int, ceiling: int | None = None) -> None:
    limit = brute_ceiling(alphabet_size) if ceiling is None else ceiling
    if n > limit:
        raise ValueError(
            f"length {n} exceeds the brute-force ceiling {limit} "
            f"for a {alphabet_size}-letter alphabet"
        )


@dataclass(frozen=True, order=True)
class SRopClass(CyclicClass):
    s: int = 2

    @property
    def also_rop(self) -> bool:
        """Whether the representative is also an ordinary (2-)rop-word."""
        w = self.representative
        return sum(w) % 2 == 0 and not _split_exists(w, 2)


def lyndon_words(n: int, alphabet: Iterable[int] = (2, 3)) -> list[Word]:
    """All Lyndon words of length ``n``, in lexicographic order (Duval's successor)."""
    letters = sorted(set(alphabet))
    if n < 1 or not letters:
        raise ValueError("need n >= 1 and a non-empty alphabet")
    k = len(letters)
    out: list[Word] = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            out.append(tuple(letters[i] for i in w))
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def iter_necklace_reps(n: int, alphabet: Sequence[int]) -> Iterator[Word]:
    letters = sorted(set(alphabet))
    for w in itertools.product(letters, repeat=n):
        if is_necklace_rep(w):
            yield w


def binary_necklaces(zeros: int, ones: int) -> list[BinaryNecklace]:
    """Binary necklaces with the given content, lexicographically ordered."""
    if zeros < 0 or ones < 0 or zeros + ones < 1:
        raise ValueError("need a non-empty content")
    n = zeros + ones
    reps = []
    for pos in itertools.combinations(range(n), ones):
        w = [0] * n
        for i in pos:
            w[i] = 1
        w = tuple(w)
        if is_necklace_rep(w):
            reps.append(w)
    return [BinaryNecklace(w) for w in sorted(reps)]


def iter_rop_classes_brute(n: int) -> Iterator[RopClass]:
    if n < 1 or n % 2 == 0:
        return
    for w in iter_necklace_reps(n, (2, 3)):
        if sum(w) % 2 == 0 and not _split_exists(w, 2):
            yield RopClass(w)


def rop_classes_bijective(n: int) -> list[RopClass]:
    if n < 1 or n % 2 == 0:
        return []
    out = []
    for n2 in range(1, n + 1, 2):
        ones = (n - n2) // 2
        out.extend(necklace_to_rop(b) for b in binary_necklaces(n2, ones))
    return sorted(out)


def rop_classes(n: int, method: str = "brute", ceiling: int | None = None) -> list[RopClass]:
    """Rop classes of length ``n`` by ``"brute"`` force or through the ``"bijection"``."""
    if method == "brute":
        check_ceiling(n, 2, ceiling)
        return list(iter_rop_classes_brute(n))
    if method == "bijection":
        return rop_classes_bijective(n)
    raise ValueError(f"unknown method {method!r}")


def lyndon_rop_words(n: int, method: str = "brute", ceiling: int | None = None) -> list[Word]:
    return [c.representative for c in rop_classes(n, method, ceiling) if c.lyndon]


def rop_content_census(n: int) -> tuple[Counter, Counter]:
    """Brute-force counts of rop classes and Lyndon rop classes keyed by (n2, n3)."""
    classes, lyndon = Counter(), Counter()
    for c in iter_rop_classes_brute(n):
        key = (c.n2, c.n3)
        classes[key] += 1
        if c.lyndon:
            lyndon[key] += 1
    return classes, lyndon


def iter_s_rop_classes(n: int, s: int) -> Iterator[SRopClass]:
    if s < 2:
        raise ValueError(f"s must be at least 2, got {s}")
    for w in iter_necklace_reps(n, (2, 3)):
        if sum(w) % s == 0 and not _split_exists(w, s):
            yield SRopClass(w, s)


def s_rop_classes(n: int, s: int, ceiling: int | None = None) -> list[SRopClass]:
    check_ceiling(n, 2, ceiling)
    return list(iter_s_rop_classes(n, s))


def iter_s_rap_classes(n: int, s: int) -> Iterator[SRopClass]:
    if s < 2:
        raise ValueError(f"s must be at least 2, got {s}")
    for w in iter_necklace_reps(n, range(1, s + 1)):
        if sum(w) % s == 0 and not _split_exists(w, s):
            yield SRopClass(w, s)


def s_rap_classes(n: int, s: int, ceiling: int | None = None) -> list[SRopClass]:
    check_ceiling(n, s, ceiling)
    return list(iter_s_rap_classes(n, s))


def class_totals(classes: Iterable[CyclicClass]) -> tuple[int, int]:
    """(number of classes, number of aperiodic classes)."""
    total = aperiodic = 0
    for c in classes:
        total += 1
        aperiodic += c.lyndon
    return total, aperiodic
