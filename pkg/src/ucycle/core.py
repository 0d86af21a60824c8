"""Words over {1..k}: rotations, necklaces, aperiodic prefixes, cyclic windows.

A word is a plain tuple of 1-based integer symbols. Words of length n are
addressed densely by their mixed-radix index (first symbol most significant),
so index order coincides with lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Word = tuple[int, ...]

# Dense tables are allocated over all k**n words; refuse anything larger.
MAX_WORDS = 2**31


class WordError(ValueError):
    """A word is malformed or does not fit the current parameters."""


@dataclass(frozen=True)
class Params:
    n: int
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise WordError(f"word length n must be a positive integer, got {self.n!r}")
        if not isinstance(self.k, int) or self.k < 2:
            raise WordError(f"alphabet size k must be an integer >= 2, got {self.k!r}")
        if self.k**self.n > MAX_WORDS:
            raise WordError(f"k**n = {self.k}**{self.n} exceeds the dense index range")

    @property
    def size(self) -> int:
        return self.k**self.n

    def top(self) -> Word:
        """The word k^n."""
        return (self.k,) * self.n

    def check(self, w: Sequence[int], length: int | None = None) -> Word:
        w = tuple(int(s) for s in w)
        want = self.n if length is None else length
        if len(w) != want:
            raise WordError(f"expected a word of length {want}, got {format_word(w)}")
        for s in w:
            if not 1 <= s <= self.k:
                raise WordError(f"symbol {s} outside 1..{self.k} in {w}")
        return w

    def index(self, w: Sequence[int]) -> int:
        i = 0
        for s in w:
            i = i * self.k + (s - 1)
        return i

    def word(self, index: int) -> Word:
        out = []
        for _ in range(self.n):
            index, d = divmod(index, self.k)
            out.append(d + 1)
        return tuple(reversed(out))

    def digits(self) -> np.ndarray:
        """All k**n words as a (k**n, n) array of symbols, in index order."""
        return _all_digits(self.n, self.k)


_DIGIT_CACHE: dict[tuple[int, int], np.ndarray] = {}


def _all_digits(n: int, k: int) -> np.ndarray:
    key = (n, k)
    if key not in _DIGIT_CACHE:
        idx = np.arange(k**n, dtype=np.int64)
        cols = [(idx // k ** (n - 1 - j)) % k + 1 for j in range(n)]
        arr = np.stack(cols, axis=1).astype(np.int8 if k < 128 else np.int32)
        arr.setflags(write=False)
        _DIGIT_CACHE[key] = arr
    return _DIGIT_CACHE[key]


@dataclass(frozen=True)
class CycleString:
    """A symbol sequence read cyclically with windows of length ``n``."""

    symbols: Word
    n: int

    def __post_init__(self) -> None:
        if len(self.symbols) < 1:
            raise WordError("a cycle must contain at least one symbol")

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return format_word(self.symbols)


def rotate_left(w: Sequence[int], steps: int = 1) -> Word:
    w = tuple(w)
    if not w:
        raise WordError("cannot rotate an empty word")
    s = steps % len(w)
    return w[s:] + w[:s]


def rotations(w: Sequence[int]) -> set[Word]:
    w = tuple(w)
    return {rotate_left(w, i) for i in range(len(w))}


def is_necklace(w: Sequence[int]) -> bool:
    w = tuple(w)
    return all(w <= rotate_left(w, i) for i in range(1, len(w)))


def necklace_of(w: Sequence[int]) -> Word:
    """Lexicographically least rotation of ``w``."""
    return min(rotations(w))


def aperiodic_prefix(w: Sequence[int]) -> Word:
    w = tuple(w)
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p]
    raise AssertionError("unreachable")


def windows(cycle: CycleString | Sequence[int], n: int | None = None) -> list[Word]:
    """All length-n windows of a cyclic string, starting at index 0."""
    if isinstance(cycle, CycleString):
        symbols, n = cycle.symbols, cycle.n if n is None else n
    else:
        symbols = tuple(cycle)
    if n is None:
        raise TypeError("window length n is required for a bare symbol sequence")
    if not symbols:
        raise WordError("cannot take windows of an empty cycle")
    L = len(symbols)
    return [tuple(symbols[(i + j) % L] for j in range(n)) for i in range(L)]


def window_indices(symbols: Sequence[int], params: Params) -> np.ndarray:
    """Mixed-radix indices of every cyclic window, vectorised."""
    arr = np.asarray(symbols, dtype=np.int64)
    L = len(arr)
    ext = np.resize(arr, L + params.n - 1)
    idx = np.zeros(L, dtype=np.int64)
    for j in range(params.n):
        idx = idx * params.k + (ext[j : j + L] - 1)
    return idx


def cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``b`` is a rotation of ``a``."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    return any(doubled[i : i + len(b)] == b for i in range(len(a)))


def format_word(w: Iterable[int], k: int | None = None) -> str:
    w = tuple(w)
    if (k is not None and k > 9) or any(s > 9 for s in w):
        return ",".join(str(s) for s in w)
    return "".join(str(s) for s in w)


def parse_word(text: str, k: int | None = None) -> Word:
    """Parse ``"534"`` or ``"12,3,11"``; comma form is required when k > 9."""
    text = text.strip()
    if not text:
        raise WordError("empty word")
    try:
        if "," in text or (k is not None and k > 9):
            w = tuple(int(t) for t in text.split(","))
        else:
            w = tuple(int(c) for c in text)
    except ValueError:
        raise WordError(f"malformed word {text!r}") from None
    if any(s < 1 for s in w) or (k is not None and any(s > k for s in w)):
        raise WordError(f"word {text!r} has symbols outside 1..{k or '?'}")
    return w
