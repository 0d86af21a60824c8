"""Greedy prefer-smallest construction of universal cycles, and their verification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import CycleString, Params, Word, format_word, window_indices
from .sets import WordSet, is_rotation_closed


@dataclass(frozen=True)
class GreedyResult:
    """Output of one greedy run from ``alpha``.

    ``stream`` holds the appended symbols a_1..a_m and ``window_indices`` the
    indices of beta_1..beta_m. ``rotation_closed`` records whether the input
    set met the closure hypothesis under which the theory applies.
    """

    params: Params
    alpha: Word
    stream: tuple[int, ...]
    window_indices: tuple[int, ...]
    completed: bool
    rotation_closed: bool

    @property
    def betas(self) -> list[Word]:
        word = self.params.word
        return [word(i) for i in self.window_indices]

    @property
    def covered(self) -> set[Word]:
        return set(self.betas)

    def cycle(self) -> CycleString:
        return CycleString(self.stream, self.params.n)

    def display(self) -> str:
        k = self.params.k
        return f"({format_word(self.alpha, k)}){format_word(self.stream, k)}"


@dataclass(frozen=True)
class Verdict:
    universal: bool
    missing: frozenset[Word]
    duplicated: frozenset[Word]
    length_matches: bool


def greedy_sequence(s: WordSet, alpha: Sequence[int]) -> GreedyResult:
    p = s.params
    alpha = tuple(alpha)
    if s.cardinality == 0:
        raise ValueError("greedy construction needs a nonempty set")
    if alpha not in s:
        raise ValueError(f"alpha {format_word(alpha)} is not in the set")

    k = p.k
    high = k ** (p.n - 1)
    mask = s.mask.tobytes()
    used = bytearray(p.size)
    start = p.index(alpha)
    cur = start
    stream: list[int] = []
    seen: list[int] = []
    completed = False
    while True:
        base = (cur % high) * k
        for b in range(k):
            j = base + b
            if mask[j] and not used[j]:
                break
        else:
            break
        used[j] = 1
        stream.append(b + 1)
        seen.append(j)
        cur = j
        if j == start:
            completed = True
            break
    return GreedyResult(
        params=p,
        alpha=alpha,
        stream=tuple(stream),
        window_indices=tuple(seen),
        completed=completed,
        rotation_closed=is_rotation_closed(s),
    )


def verify_universal_cycle(c: CycleString | Sequence[int], s: WordSet) -> Verdict:
    symbols = c.symbols if isinstance(c, CycleString) else tuple(c)
    p = s.params
    if not symbols:
        missing = frozenset(s)
        return Verdict(not missing, missing, frozenset(), s.cardinality == 0)
    idx = window_indices(symbols, p)
    counts = np.bincount(idx, minlength=p.size)
    missing_mask = s.mask & (counts == 0)
    dup_mask = (counts >= 2) | ((counts >= 1) & ~s.mask)
    word = p.word
    missing = frozenset(word(int(i)) for i in np.flatnonzero(missing_mask))
    duplicated = frozenset(word(int(i)) for i in np.flatnonzero(dup_mask))
    length_matches = len(symbols) == s.cardinality
    return Verdict(
        universal=not missing and not duplicated and length_matches,
        missing=missing,
        duplicated=duplicated,
        length_matches=length_matches,
    )


def greedy_is_universal(s: WordSet, alpha: Sequence[int]) -> bool:
    r = greedy_sequence(s, alpha)
    return r.completed and verify_universal_cycle(r.stream, s).universal
