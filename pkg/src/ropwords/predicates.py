"""Decision procedures for the rhythmic oddity property and its relatives.

Four equivalent tests decide whether a word over ``{2, 3}`` is a rop-word:

* :func:`is_rop` -- directly from the definition (no rotation splits into
  two factors of equal height);
* :func:`is_rop_lemma1` -- odd length ``2l+1`` and every rotation's prefix
  of length ``l`` has height ``h-2`` or ``h-1`` (total height ``2h``);
* :func:`is_rop_pairing` -- odd length and an ``l``-pairing of the 3s;
* :func:`is_rop_stepread` -- odd length and a 1-pairing of the word read
  by stride ``l``.

The last three presume an even height and raise otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import Word, WordLike, as_word, check_alphabet, step_read

ROP_ALPHABET = (2, 3)


def _split_exists(w: Word, s: int) -> bool:
    # Cut points of the circle sit at the prefix sums 0 = P_0 < ... < P_{n-1}.
    # A rotation splits into s equal factors iff some cut c has c + k*h/s
    # (mod h) also a cut for k = 1..s-1.  Letters are positive, so the cuts
    # are pairwise distinct and every factor is non-empty.
    h = sum(w)
    if h % s:
        return False
    step = h // s
    cuts = []
    acc = 0
    for a in w:
        cuts.append(acc)
        acc += a
    cutset = set(cuts)
    for c in cuts:
        if c >= step:
            break
        if all((c + k * step) % h in cutset for k in range(1, s)):
            return True
    return False


def equal_height_split(w: WordLike, s: int) -> bool:
    """Whether some rotation of ``w`` factors into ``s`` pieces of equal height."""
    w = as_word(w)
    if not w:
        raise ValueError("equal_height_split is undefined on the empty word")
    if s < 2:
        raise ValueError(f"s must be at least 2, got {s}")
    if 0 in w:
        raise ValueError("letters must be positive")
    return _split_exists(w, s)


def _rop_word(w: WordLike) -> Word:
    w = as_word(w)
    check_alphabet(w, ROP_ALPHABET)
    return w


def is_rop(w: WordLike) -> bool:
    w = _rop_word(w)
    if not w:
        return False
    return sum(w) % 2 == 0 and not _split_exists(w, 2)


def _even_height(w: WordLike) -> Word:
    w = _rop_word(w)
    if not w:
        raise ValueError("empty word")
    if sum(w) % 2:
        raise ValueError(f"height of {w} is odd")
    return w


def is_rop_lemma1(w: WordLike) -> bool:
    """Prefix-height characterization of rop-words (even height required)."""
    w = _even_height(w)
    n = len(w)
    if n % 2 == 0:
        return False
    half = sum(w) // 2
    ell = (n - 1) // 2
    ok = (half - 2, half - 1)
    ww = w + w
    return all(sum(ww[i:i + ell]) in ok for i in range(n))


@dataclass(frozen=True)
class Pairing:
    """Disjoint pairs ``(j, (j + d) % n)`` covering the positions of letter 3."""

    pairs: tuple[tuple[int, int], ...]
    d: int
    n: int

    def positions(self) -> set[int]:
        return {i for pair in self.pairs for i in pair}


def has_d_pairing(w: WordLike, d: int) -> Pairing | None:
    """Return the forced ``d``-pairing of the 3s in ``w``, or None if there is none.

    Indices are taken mod ``len(w)``.  Positions split into ``gcd(d, n)``
    orbits under ``j -> j + d``; along each orbit the 3s must form runs of
    even length, which are then paired off in order.
    """
    w = as_word(w)
    n = len(w)
    if not 0 < d < n:
        raise ValueError(f"d must satisfy 0 < d < {n}, got {d}")
    g = math.gcd(d, n)
    size = n // g
    pairs: list[tuple[int, int]] = []
    for r in range(g):
        orbit = [(r + k * d) % n for k in range(size)]
        threes = [w[i] == 3 for i in orbit]
        if all(threes):
            if size % 2:
                return None
            start = 0
        elif any(threes):
            # begin at a non-3 so that no run wraps around the orbit
            start = threes.index(False)
        else:
            continue
        run: list[int] = []
        for k in range(size + 1):
            idx = (start + k) % size
            if k < size and threes[idx]:
                run.append(orbit[idx])
                continue
            if len(run) % 2:
                return None
            pairs.extend((run[m], run[m + 1]) for m in range(0, len(run), 2))
            run = []
    return Pairing(tuple(sorted(pairs)), d, n)


def is_rop_pairing(w: WordLike) -> bool:
    w = _even_height(w)
    n = len(w)
    if n % 2 == 0:
        return False
    if n == 1:
        return True  # w == (2,)
    return has_d_pairing(w, (n - 1) // 2) is not None


def is_rop_stepread(w: WordLike) -> bool:
    w = _even_height(w)
    n = len(w)
    if n % 2 == 0:
        return False
    if n == 1:
        return True
    return has_d_pairing(step_read(w, (n - 1) // 2), 1) is not None


ROP_METHODS = {
    "def": is_rop,
    "lemma1": is_rop_lemma1,
    "pairing": is_rop_pairing,
    "stepread": is_rop_stepread,
}


def rop_verdicts(w: WordLike) -> dict[str, bool]:
    """Run every rop test; odd-height words are reported as non-rop by all."""
    w = _rop_word(w)
    if not w or sum(w) % 2:
        return {name: False for name in ROP_METHODS}
    return {name: test(w) for name, test in ROP_METHODS.items()}


def is_s_rop(w: WordLike, s: int) -> bool:
    w = _rop_word(w)
    if not w:
        raise ValueError("empty word")
    if s < 2:
        raise ValueError(f"s must be at least 2, got {s}")
    return sum(w) % s == 0 and not _split_exists(w, s)


def is_s_rap(w: WordLike, s: int) -> bool:
    w = as_word(w)
    if not w:
        raise ValueError("empty word")
    if s < 2:
        raise ValueError(f"s must be at least 2, got {s}")
    check_alphabet(w, range(1, s + 1))
    # factors are non-empty because every cut height is hit at a distinct index
    return sum(w) % s == 0 and not _split_exists(w, s)
