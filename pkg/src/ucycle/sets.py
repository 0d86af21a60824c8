"""Set specifications and their dense materialisation.

A :class:`SetSpec` describes a subset of T(n,k) declaratively; ``materialize``
turns it into a :class:`WordSet`, a boolean membership table over all k**n
word indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union

import numpy as np

from .core import Params, Word, WordError, format_word, parse_word, rotate_left


class SpecError(ValueError):
    """A set specification is invalid or cannot be parsed."""


# -- families ---------------------------------------------------------------


@dataclass(frozen=True)
class Explicit:
    words: tuple[Word, ...]


@dataclass(frozen=True)
class Full:
    pass


@dataclass(frozen=True)
class AscendingRotations:
    pass


@dataclass(frozen=True)
class IncreasableClosure:
    alpha: Word


@dataclass(frozen=True)
class BoundedCyclicSteps:
    max_increment: int
    max_decrement: int


@dataclass(frozen=True)
class SpanBounded:
    min_span: int
    max_span: int


@dataclass(frozen=True)
class ForbidCyclicSubstring:
    gamma: Word


@dataclass(frozen=True)
class NoPrimes:
    pass


@dataclass(frozen=True)
class Union_:
    left: "SetSpec"
    right: "SetSpec"


@dataclass(frozen=True)
class Intersection:
    left: "SetSpec"
    right: "SetSpec"


Family = Union[
    Explicit,
    Full,
    AscendingRotations,
    IncreasableClosure,
    BoundedCyclicSteps,
    SpanBounded,
    ForbidCyclicSubstring,
    NoPrimes,
    Union_,
    Intersection,
]


@dataclass(frozen=True)
class SetSpec:
    params: Params
    family: Family

    def __post_init__(self) -> None:
        validate(self)

    @classmethod
    def of(cls, n: int, k: int, family: Family) -> "SetSpec":
        try:
            params = Params(n, k)
        except WordError as e:
            raise SpecError(str(e)) from None
        return cls(params, family)


def validate(spec: SetSpec) -> None:
    p, f = spec.params, spec.family
    try:
        if isinstance(f, Explicit):
            for w in f.words:
                p.check(w)
        elif isinstance(f, AscendingRotations):
            if p.n > p.k:
                raise SpecError("ascending_rotations requires n <= k")
        elif isinstance(f, IncreasableClosure):
            p.check(f.alpha)
        elif isinstance(f, BoundedCyclicSteps):
            if f.max_increment < 1 or f.max_decrement < 1:
                raise SpecError("bounded_cyclic_steps requires I >= 1 and D >= 1")
        elif isinstance(f, SpanBounded):
            if not 0 <= f.min_span < f.max_span < p.k:
                raise SpecError("span_bounded requires 0 <= m < M < k")
        elif isinstance(f, ForbidCyclicSubstring):
            if not 1 <= len(f.gamma) <= p.n:
                raise SpecError("forbidden substring length must be in 1..n")
            p.check(f.gamma, length=len(f.gamma))
        elif isinstance(f, NoPrimes):
            if (p.n, p.k) != (2, 9):
                raise SpecError("no_primes is defined only for n = 2, k = 9")
        elif isinstance(f, (Union_, Intersection)):
            if f.left.params != p or f.right.params != p:
                raise SpecError("nested specs must share n and k")
        elif not isinstance(f, Full):
            raise SpecError(f"unknown family {f!r}")
    except WordError as e:
        raise SpecError(str(e)) from None


# -- word sets --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class WordSet:
    """A materialised subset of T(n,k) with O(1) membership."""

    params: Params
    mask: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.mask.shape != (self.params.size,) or self.mask.dtype != bool:
            raise ValueError("membership mask must be a bool array of length k**n")
        self.mask.setflags(write=False)

    @classmethod
    def from_words(cls, params: Params, words: Sequence[Sequence[int]]) -> "WordSet":
        mask = np.zeros(params.size, dtype=bool)
        for w in words:
            mask[params.index(params.check(w))] = True
        return cls(params, mask)

    @classmethod
    def full(cls, params: Params) -> "WordSet":
        return cls(params, np.ones(params.size, dtype=bool))

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def cardinality(self) -> int:
        return int(self.mask.sum())

    def __len__(self) -> int:
        return self.cardinality

    def __contains__(self, w: object) -> bool:
        if not isinstance(w, (tuple, list)) or len(w) != self.params.n:
            return False
        if any(not isinstance(s, (int, np.integer)) or not 1 <= s <= self.params.k for s in w):
            return False
        return bool(self.mask[self.params.index(w)])

    def contains_index(self, i: int) -> bool:
        return bool(self.mask[i])

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def __iter__(self) -> Iterator[Word]:
        """Members in lexicographic order."""
        word = self.params.word
        for i in self.indices():
            yield word(int(i))

    def words(self) -> list[Word]:
        return list(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordSet):
            return NotImplemented
        return self.params == other.params and bool(np.array_equal(self.mask, other.mask))

    def __hash__(self) -> int:
        return hash((self.params, self.mask.tobytes()))

    def __or__(self, other: "WordSet") -> "WordSet":
        _same_params(self, other)
        return WordSet(self.params, self.mask | other.mask)

    def __and__(self, other: "WordSet") -> "WordSet":
        _same_params(self, other)
        return WordSet(self.params, self.mask & other.mask)

    def __repr__(self) -> str:
        body = ", ".join(format_word(w) for w in list(self)[:8])
        more = ", ..." if self.cardinality > 8 else ""
        return f"WordSet(n={self.n}, k={self.k}, |S|={self.cardinality}, {{{body}{more}}})"


def _same_params(a: WordSet, b: WordSet) -> None:
    if a.params != b.params:
        raise SpecError("word sets have different n or k")


def _rotation_index_map(params: Params) -> np.ndarray:
    """rot[i] = index of rotate_left(word(i), 1)."""
    idx = np.arange(params.size, dtype=np.int64)
    high = params.k ** (params.n - 1)
    return (idx % high) * params.k + idx // high


def is_rotation_closed(s: WordSet) -> bool:
    rot = _rotation_index_map(s.params)
    return bool(np.all(s.mask[rot] | ~s.mask))


def rotation_closure(s: WordSet) -> WordSet:
    rot = _rotation_index_map(s.params)
    mask = s.mask.copy()
    cur = s.mask.copy()
    for _ in range(s.n - 1):
        nxt = np.zeros_like(cur)
        nxt[rot[cur]] = True
        mask |= nxt
        cur = nxt
    return WordSet(s.params, mask)


# -- materialisation --------------------------------------------------------


def _is_prime(v: int) -> bool:
    if v < 2:
        return False
    d = 2
    while d * d <= v:
        if v % d == 0:
            return False
        d += 1
    return True


def _cyclic_neighbors(digits: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    d = digits.astype(np.int64)
    return d, np.roll(d, -1, axis=1)


def materialize(spec: SetSpec) -> WordSet:
    p, f = spec.params, spec.family
    if isinstance(f, Explicit):
        return WordSet.from_words(p, f.words)
    if isinstance(f, Full):
        return WordSet.full(p)
    if isinstance(f, (Union_, Intersection)):
        left, right = materialize(f.left), materialize(f.right)
        return left | right if isinstance(f, Union_) else left & right

    if isinstance(f, NoPrimes):
        words = [
            (a, b)
            for a in range(1, 10)
            for b in range(1, 10)
            if not _is_prime(10 * a + b) and not _is_prime(10 * b + a)
        ]
        return WordSet.from_words(p, words)

    d, nxt = _cyclic_neighbors(p.digits())
    if isinstance(f, AscendingRotations):
        # some rotation is strictly increasing <=> exactly n-1 strict cyclic ascents
        mask = (nxt > d).sum(axis=1) == p.n - 1
    elif isinstance(f, IncreasableClosure):
        mask = np.zeros(p.size, dtype=bool)
        for i in range(p.n):
            rho = np.array(rotate_left(f.alpha, i), dtype=np.int64)
            mask |= np.all(d <= rho, axis=1)
    elif isinstance(f, BoundedCyclicSteps):
        step = nxt - d
        mask = np.all((step <= f.max_increment) & (-step <= f.max_decrement), axis=1)
    elif isinstance(f, SpanBounded):
        span = d.max(axis=1) - d.min(axis=1)
        mask = (span >= f.min_span) & (span <= f.max_span)
    elif isinstance(f, ForbidCyclicSubstring):
        hit = np.zeros(p.size, dtype=bool)
        for start in range(p.n):
            occ = np.ones(p.size, dtype=bool)
            for j, g in enumerate(f.gamma):
                occ &= d[:, (start + j) % p.n] == g
            hit |= occ
        mask = ~hit
    else:
        raise SpecError(f"unknown family {f!r}")
    return WordSet(p, np.ascontiguousarray(mask, dtype=bool))


# -- JSON -------------------------------------------------------------------


def spec_from_dict(data: dict) -> SetSpec:
    try:
        n, k, fam = int(data["n"]), int(data["k"]), data["family"]
        kind = fam["type"]
    except (KeyError, TypeError, ValueError) as e:
        raise SpecError(f"malformed spec: {e}") from None

    def word(key: str) -> Word:
        try:
            return parse_word(str(fam[key]), k)
        except KeyError:
            raise SpecError(f"family {kind!r} needs field {key!r}") from None
        except WordError as e:
            raise SpecError(str(e)) from None

    def integer(key: str) -> int:
        try:
            return int(fam[key])
        except (KeyError, TypeError, ValueError):
            raise SpecError(f"family {kind!r} needs integer field {key!r}") from None

    if kind == "explicit":
        try:
            family: Family = Explicit(tuple(parse_word(str(w), k) for w in fam["words"]))
        except KeyError:
            raise SpecError("explicit family needs 'words'") from None
        except WordError as e:
            raise SpecError(str(e)) from None
    elif kind == "full":
        family = Full()
    elif kind == "ascending_rotations":
        family = AscendingRotations()
    elif kind == "increasable_closure":
        family = IncreasableClosure(word("alpha"))
    elif kind == "bounded_cyclic_steps":
        family = BoundedCyclicSteps(integer("I"), integer("D"))
    elif kind == "span_bounded":
        family = SpanBounded(integer("m"), integer("M"))
    elif kind == "forbid_cyclic_substring":
        family = ForbidCyclicSubstring(word("gamma"))
    elif kind == "no_primes":
        family = NoPrimes()
    elif kind in ("union", "intersection"):
        try:
            left, right = spec_from_dict(fam["left"]), spec_from_dict(fam["right"])
        except KeyError:
            raise SpecError(f"{kind} needs 'left' and 'right'") from None
        family = Union_(left, right) if kind == "union" else Intersection(left, right)
    else:
        raise SpecError(f"unknown family type {kind!r}")
    return SetSpec.of(n, k, family)


def spec_to_dict(spec: SetSpec) -> dict:
    f, k = spec.family, spec.params.k
    if isinstance(f, Explicit):
        fam: dict = {"type": "explicit", "words": [format_word(w, k) for w in f.words]}
    elif isinstance(f, Full):
        fam = {"type": "full"}
    elif isinstance(f, AscendingRotations):
        fam = {"type": "ascending_rotations"}
    elif isinstance(f, IncreasableClosure):
        fam = {"type": "increasable_closure", "alpha": format_word(f.alpha, k)}
    elif isinstance(f, BoundedCyclicSteps):
        fam = {"type": "bounded_cyclic_steps", "I": f.max_increment, "D": f.max_decrement}
    elif isinstance(f, SpanBounded):
        fam = {"type": "span_bounded", "m": f.min_span, "M": f.max_span}
    elif isinstance(f, ForbidCyclicSubstring):
        fam = {"type": "forbid_cyclic_substring", "gamma": format_word(f.gamma, k)}
    elif isinstance(f, NoPrimes):
        fam = {"type": "no_primes"}
    else:
        kind = "union" if isinstance(f, Union_) else "intersection"
        fam = {"type": kind, "left": spec_to_dict(f.left), "right": spec_to_dict(f.right)}
    return {"n": spec.params.n, "k": spec.params.k, "family": fam}


def load_spec(text: str) -> SetSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f"spec is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    return spec_from_dict(data)


def dump_spec(spec: SetSpec) -> str:
    return json.dumps(spec_to_dict(spec))
