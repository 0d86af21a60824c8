"""Increasability: raising one symbol at a time while staying inside a set.

A step replaces a single symbol ``b`` by any ``b' > b``; with ``unit=True``
only ``b' = b + 1`` is allowed.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .core import Word, format_word, rotations
from .sets import WordSet


def _require_member(w: Word, s: WordSet) -> None:
    if w not in s:
        raise ValueError(f"{format_word(w)} is not in the set")


def increase_successors(w: Sequence[int], s: WordSet, unit: bool = False) -> set[Word]:
    w = tuple(w)
    _require_member(w, s)
    out = set()
    for i, b in enumerate(w):
        top = min(b + 1, s.k) if unit else s.k
        for c in range(b + 1, top + 1):
            v = w[:i] + (c,) + w[i + 1 :]
            if v in s:
                out.add(v)
    return out


def decrease_predecessors(w: Sequence[int], s: WordSet, unit: bool = False) -> set[Word]:
    """Members of ``s`` from which ``w`` is one increase step away."""
    w = tuple(w)
    out = set()
    for i, b in enumerate(w):
        low = max(b - 1, 1) if unit else 1
        for c in range(low, b):
            v = w[:i] + (c,) + w[i + 1 :]
            if v in s:
                out.add(v)
    return out


def increasable_to(
    w: Sequence[int], targets: Iterable[Sequence[int]], s: WordSet, unit: bool = False
) -> tuple[bool, list[Word] | None]:
    """Breadth-first search for an increase path from ``w`` into ``targets``.

    Returns ``(found, path)`` where ``path`` lists the words after ``w``; it is
    empty when ``w`` is itself a target and ``None`` when no path exists.
    """
    w = tuple(w)
    _require_member(w, s)
    goal = {tuple(t) for t in targets}
    if w in goal:
        return True, []
    parent: dict[Word, Word] = {w: w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for v in sorted(increase_successors(u, s, unit)):
            if v in parent:
                continue
            parent[v] = u
            if v in goal:
                path = [v]
                while parent[path[-1]] != w:
                    path.append(parent[path[-1]])
                return True, path[::-1]
            queue.append(v)
    return False, None


def increasable_set(s: WordSet, alpha: Sequence[int], unit: bool = False) -> WordSet:
    """Members increasable in ``s`` to some rotation of ``alpha``.

    One backward pass: start from the rotations of alpha and follow decrease
    edges.
    """
    alpha = tuple(alpha)
    _require_member(alpha, s)
    p = s.params
    mask = np.zeros(p.size, dtype=bool)
    queue = deque()
    for r in rotations(alpha):
        if r in s:
            mask[p.index(r)] = True
            queue.append(r)
    while queue:
        u = queue.popleft()
        for v in decrease_predecessors(u, s, unit):
            i = p.index(v)
            if not mask[i]:
                mask[i] = True
                queue.append(v)
    return WordSet(p, mask)
