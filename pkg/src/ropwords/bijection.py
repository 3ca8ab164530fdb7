"""Bijection between binary necklaces with an odd number of zeros and rop classes.

A rop-word ``w`` of length ``2l+1`` read by stride ``l`` has its 3s in
adjacent pairs; replacing ``2 -> 0`` and ``33 -> 1`` and reading the result
backwards (clockwise on the circle) gives a binary necklace.  Going back,
reverse, send ``0 -> 2`` and ``1 -> 33``, then undo the stride.

The backward reading fixes the orientation: ``001011`` corresponds to
``232332333`` and its mirror ``001101`` to ``232333233``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .predicates import is_rop
from .words import CyclicClass, Word, WordLike, as_word, check_alphabet, step_read, step_unread


@dataclass(frozen=True, order=True)
class BinaryNecklace(CyclicClass):
    @property
    def zeros(self) -> int:
        return self.representative.count(0)

    @property
    def ones(self) -> int:
        return self.representative.count(1)


@dataclass(frozen=True, order=True)
class RopClass(CyclicClass):
    @property
    def n2(self) -> int:
        return self.representative.count(2)

    @property
    def n3(self) -> int:
        return self.representative.count(3)


def psi(w: WordLike) -> Word:
    """Map ``2 -> 0`` and each adjacent ``33 -> 1``, reading linearly."""
    w = as_word(w)
    check_alphabet(w, (2, 3))
    out: list[int] = []
    run = 0
    for a in w + (2,):
        if a == 3:
            run += 1
            continue
        if run % 2:
            raise ValueError(f"odd run of 3s in {w}; no non-wrapping 1-pairing")
        out.extend([1] * (run // 2))
        run = 0
        out.append(0)
    return tuple(out[:-1])


def psi_inverse(b: WordLike) -> Word:
    b = as_word(b)
    check_alphabet(b, (0, 1))
    out: list[int] = []
    for a in b:
        out.extend((3, 3) if a else (2,))
    return tuple(out)


def _necklace(b: WordLike | BinaryNecklace) -> BinaryNecklace:
    if isinstance(b, BinaryNecklace):
        return b
    b = as_word(b)
    check_alphabet(b, (0, 1))
    if not b:
        raise ValueError("empty necklace")
    return BinaryNecklace.of(b)


def necklace_to_rop(b: WordLike | BinaryNecklace) -> RopClass:
    """Image of a binary necklace (odd zero count) as a rop class."""
    neck = _necklace(b)
    if neck.zeros % 2 == 0:
        raise ValueError(f"necklace {neck} has an even number of zeros")
    u = psi_inverse(neck.representative[::-1])
    ell = (len(u) - 1) // 2
    if ell == 0:
        return RopClass.of(u)
    return RopClass.of(step_unread(u, ell))


def rop_to_necklace(w: WordLike | RopClass) -> BinaryNecklace:
    """Binary necklace of a rop-word; inverse of :func:`necklace_to_rop` on classes."""
    w = w.representative if isinstance(w, RopClass) else as_word(w)
    if not is_rop(w):
        raise ValueError(f"{w} is not a rop-word")
    ell = (len(w) - 1) // 2
    x = step_read(w, ell) if ell else w
    # the 1-pairing is forced run by run; starting at a 2 keeps every run whole
    k = x.index(2)
    return BinaryNecklace.of(psi(x[k:] + x[:k])[::-1])
