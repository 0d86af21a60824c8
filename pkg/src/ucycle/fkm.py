"""Necklace concatenation (FKM) restricted to a set, and the suffix-language predicates."""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import CycleString, Word, aperiodic_prefix, cyclic_equal, format_word, is_necklace
from .greedy import greedy_sequence
from .sets import WordSet, is_rotation_closed


def necklaces_of(s: WordSet) -> list[Word]:
    # WordSet iterates in lexicographic order already
    return [w for w in s if is_necklace(w)]


def fkm_tokens(s: WordSet) -> list[Word]:
    """Aperiodic prefixes of the necklaces of ``s``, in order."""
    return [aperiodic_prefix(w) for w in necklaces_of(s)]


def fkm_cycle(s: WordSet) -> CycleString:
    tokens = fkm_tokens(s)
    if not tokens:
        raise ValueError("FKM concatenation needs a nonempty set")
    return CycleString(tuple(sym for t in tokens for sym in t), s.n)


def format_tokens(tokens: Iterable[Word], k: int | None = None) -> str:
    return " ".join(format_word(t, k) for t in tokens)


def is_k_suffix_language(s: WordSet) -> bool:
    """Every necklace stays a necklace of ``s`` after any suffix becomes all k's."""
    k, n = s.k, s.n
    for w in necklaces_of(s):
        for i in range(1, n + 1):
            v = w[: n - i] + (k,) * i
            if v not in s or not is_necklace(v):
                return False
    return True


def is_alpha_suffix_language(necklaces: Iterable[Sequence[int]], alpha: Sequence[int]) -> bool:
    """Members are componentwise <= alpha and closed under taking alpha's suffixes."""
    members = {tuple(w) for w in necklaces}
    alpha = tuple(alpha)
    if alpha not in members:
        raise ValueError(f"alpha {format_word(alpha)} is not among the necklaces")
    for b in members:
        if any(x > y for x, y in zip(b, alpha)):
            return False
        for m in range(len(alpha)):
            if b[:m] + alpha[m:] not in members:
                return False
    return True


def max_necklace(s: WordSet) -> Word:
    necks = necklaces_of(s)
    if not necks:
        raise ValueError("set has no necklaces")
    return necks[-1]


def fkm_equals_greedy(s: WordSet, alpha: Sequence[int] | None = None) -> bool:
    """Does FKM reproduce the greedy cycle from the largest necklace, up to rotation?"""
    if not is_rotation_closed(s):
        raise ValueError("set must be closed under rotations")
    top = max_necklace(s)
    alpha = top if alpha is None else tuple(alpha)
    if alpha != top:
        raise ValueError(
            f"alpha must be the largest necklace {format_word(top)}, got {format_word(alpha)}"
        )
    res = greedy_sequence(s, alpha)
    return cyclic_equal(fkm_cycle(s).symbols, res.stream)
