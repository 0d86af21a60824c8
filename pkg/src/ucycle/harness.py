"""Counterexample sweeps for the two open conjectures, plus fixed case studies.

Every sweep returns a :class:`SweepReport` whose records serialise to JSON
lines of the form ``{"instance": ..., "verdict": ..., "missing": [...], "seed": ...}``.
Records are emitted in a canonical order, so reports are byte-identical across
runs with the same arguments.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import Params, Word, format_word, rotations
from .fkm import fkm_cycle, is_alpha_suffix_language, max_necklace, necklaces_of
from .greedy import greedy_sequence, verify_universal_cycle
from .sets import (
    AscendingRotations,
    BoundedCyclicSteps,
    Explicit,
    ForbidCyclicSubstring,
    Full,
    IncreasableClosure,
    Intersection,
    SetSpec,
    SpanBounded,
    Union_,
    WordSet,
    materialize,
)

MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> Iterator[int]:
    state = seed & MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


@dataclass
class SweepReport:
    name: str
    records: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.records if r.get("flagged")]

    @property
    def ok(self) -> bool:
        return not self.failures

    def jsonl(self) -> str:
        lines = []
        for r in self.records:
            out = {key: r[key] for key in ("instance", "verdict", "missing", "seed")}
            lines.append(json.dumps(out, sort_keys=True))
        return "\n".join(lines)

    def summary(self) -> str:
        return f"{self.name}: {len(self.records)} instance(s), {len(self.failures)} flagged"


def _words(ws, k: int) -> list[str]:
    return [format_word(w, k) for w in sorted(ws)]


def greedy_outcome(s: WordSet, alpha: Word) -> tuple[bool, frozenset[Word]]:
    res = greedy_sequence(s, alpha)
    verdict = verify_universal_cycle(res.stream, s)
    return res.completed and verdict.universal, verdict.missing


# -- conjecture 1 -----------------------------------------------------------


def conjecture1_instance(gamma: Word, n: int, k: int) -> dict:
    s = materialize(SetSpec.of(n, k, ForbidCyclicSubstring(gamma)))
    alpha = (k,) * n
    instance = {"gamma": format_word(gamma, k), "n": n, "k": k}
    if s.cardinality == 0 or alpha not in s:
        return {"instance": instance, "verdict": "skipped", "missing": [], "seed": None,
                "flagged": False}
    universal, missing = greedy_outcome(s, alpha)
    return {
        "instance": instance,
        "verdict": "universal" if universal else "counterexample",
        "missing": _words(missing, k),
        "seed": None,
        "flagged": not universal,
    }


def conjecture1_sweep(k: int = 3, n_max: int = 4, m_max: int = 2) -> SweepReport:
    """Forbidden substrings containing a symbol <= k-2; greedy from k^n should always work."""
    if k < 3:
        raise ValueError("the sweep needs k >= 3")
    if not 1 <= m_max <= n_max:
        raise ValueError("need 1 <= m_max <= n_max")
    rep = SweepReport(f"conjecture1(k={k}, n_max={n_max}, m_max={m_max})")
    for m in range(1, m_max + 1):
        for gamma in itertools.product(range(1, k + 1), repeat=m):
            if min(gamma) > k - 2:
                continue
            for n in range(m, n_max + 1):
                rep.records.append(conjecture1_instance(gamma, n, k))
    return rep


# -- forbidden substrings over {8, 9} ---------------------------------------

SUCCEEDING = ((8, 8, 9, 9), (8, 9, 8, 9))
FAILING = ((8, 9), (8, 8, 9), (8, 9, 9), (8, 8, 8, 9), (8, 9, 9, 9))
PERIOD_DEPENDENT = (8, 9, 9, 8)


def expected_forbidden_outcome(gamma: Word, n: int) -> bool:
    if gamma == PERIOD_DEPENDENT:
        return n % 3 != 0
    return gamma in SUCCEEDING


def forbidden_suffix_cases(n: int, gammas: Sequence[Word] | None = None) -> SweepReport:
    """Greedy from 9^n over T(n,9) avoiding each listed substring."""
    if n < 4:
        raise ValueError("the case study needs n >= 4")
    if gammas is None:
        gammas = SUCCEEDING + FAILING + (PERIOD_DEPENDENT,)
    rep = SweepReport(f"forbidden-suffix(n={n})")
    for gamma in gammas:
        gamma = tuple(gamma)
        s = materialize(SetSpec.of(n, 9, ForbidCyclicSubstring(gamma)))
        universal, missing = greedy_outcome(s, (9,) * n)
        expected = expected_forbidden_outcome(gamma, n)
        rep.records.append(
            {
                "instance": {"gamma": format_word(gamma), "n": n, "k": 9,
                             "expected": "universal" if expected else "not-universal",
                             "missing_count": len(missing)},
                "verdict": "universal" if universal else "not-universal",
                "missing": _words(missing, 9),
                "seed": None,
                "flagged": universal != expected,
            }
        )
    return rep


# -- conjecture 2 -----------------------------------------------------------


def rotation_classes(params: Params) -> list[Word]:
    """Necklace representatives of every rotation class of T(n,k)."""
    return necklaces_of(WordSet.full(params))


def set_from_classes(params: Params, reps: Sequence[Word]) -> WordSet:
    words = set()
    for r in reps:
        words |= rotations(r)
    return WordSet.from_words(params, sorted(words))


def conjecture2_instance(s: WordSet) -> dict:
    """Compare FKM success with the alpha-suffix property of the necklaces."""
    k = s.k
    necks = necklaces_of(s)
    alpha = max_necklace(s)
    verdict = verify_universal_cycle(fkm_cycle(s), s)
    lhs = verdict.universal
    rhs = is_alpha_suffix_language(necks, alpha)
    record = {
        "instance": {"n": s.n, "k": k, "alpha": format_word(alpha, k),
                     "necklaces": _words(necks, k)},
        "verdict": {"fkm_universal": lhs, "alpha_suffix": rhs, "agree": lhs == rhs},
        "missing": _words(verdict.missing, k),
        "seed": None,
        "flagged": lhs != rhs,
    }
    if lhs != rhs:
        record["instance"]["members"] = _words(s, k)
    return record


def conjecture2_sweep(
    n: int = 3,
    k: int = 3,
    trials: int = 200,
    seed: int = 0,
    exhaustive: bool = False,
    forced: Sequence[WordSet] = (),
) -> SweepReport:
    """Random (or exhaustive) rotation-closed sets, each class kept with probability 1/2."""
    params = Params(n, k)
    classes = rotation_classes(params)
    mode = "exhaustive" if exhaustive else f"trials={trials}, seed={seed}"
    rep = SweepReport(f"conjecture2(n={n}, k={k}, {mode})")

    for i, s in enumerate(forced):
        rec = conjecture2_instance(s)
        rec["instance"]["forced"] = i
        rep.records.append(rec)

    if exhaustive:
        for bits in range(1, 2 ** len(classes)):
            chosen = [c for j, c in enumerate(classes) if bits >> j & 1]
            rec = conjecture2_instance(set_from_classes(params, chosen))
            rec["instance"]["subset"] = bits
            rep.records.append(rec)
        return rep

    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = splitmix64(seed)
    for t in range(trials):
        while True:
            chosen = [c for c in classes if next(rng) >> 63]
            if chosen:
                break
        rec = conjecture2_instance(set_from_classes(params, chosen))
        rec["instance"]["trial"] = t
        rec["seed"] = seed
        rep.records.append(rec)
    return rep


# -- unions and intersections -----------------------------------------------


def union_intersection_demo() -> SweepReport:
    """Greedy from 33 on two sets in T(2,3), their intersection, and their union."""
    params = Params(2, 3)
    left = SetSpec(params, Explicit(((1, 1), (1, 3), (3, 1), (3, 3))))
    right = SetSpec(params, Explicit(((1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (3, 3))))
    a, b = materialize(left), materialize(right)
    cases = [("first", a, True), ("second", b, True), ("intersection", a & b, False),
             ("union", a | b, True)]
    rep = SweepReport("union-intersection")
    for label, s, expected in cases:
        universal, missing = greedy_outcome(s, (3, 3))
        rep.records.append(
            {
                "instance": {"set": label, "members": _words(s, 3), "alpha": "33"},
                "verdict": "universal" if universal else "not-universal",
                "missing": _words(missing, 3),
                "seed": None,
                "flagged": universal != expected,
            }
        )
    return rep



# -- family instances for theorem checks ------------------------------------


def family_instances(n_max: int = 4, k_max: int = 4) -> Iterator[tuple[str, WordSet, Word]]:
    """Every family construction with n <= n_max, 2 <= k <= k_max, with a goal word.

    Increasable closures are taken for every start word; forbidden substrings
    up to length 2. The goal is the family's natural start word where one
    exists, otherwise k^n or the largest necklace. Empty sets are skipped.
    """
    for label, spec, alpha in _family_specs(n_max, k_max):
        s = materialize(spec)
        if s.cardinality == 0:
            continue
        if alpha is None:
            top = spec.params.top()
            alpha = top if top in s else max_necklace(s)
        yield label, s, tuple(alpha)


def _family_specs(n_max: int, k_max: int) -> Iterator[tuple[str, SetSpec, Word | None]]:
    for n in range(1, n_max + 1):
        for k in range(2, k_max + 1):
            p = Params(n, k)
            top = p.top()
            tag = f"T({n},{k})"
            for alpha in necklaces_of(WordSet.full(p)):
                yield f"full {tag} alpha={format_word(alpha)}", SetSpec(p, Full()), alpha
            if n <= k:
                yield f"ascending {tag}", SetSpec(p, AscendingRotations()), tuple(
                    range(k - n + 1, k + 1))
            for alpha in itertools.product(range(1, k + 1), repeat=n):
                yield (f"increasable-closure({format_word(alpha)}) {tag}",
                       SetSpec(p, IncreasableClosure(alpha)), alpha)
            for inc in range(1, k):
                for dec in range(1, k):
                    yield f"steps(I={inc},D={dec}) {tag}", SetSpec(
                        p, BoundedCyclicSteps(inc, dec)), top
            for lo in range(0, k):
                for hi in range(lo + 1, k):
                    yield f"span({lo},{hi}) {tag}", SetSpec(p, SpanBounded(lo, hi)), (
                        (k - lo,) + (k,) * (n - 1))
            for m in range(1, min(n, 2) + 1):
                for gamma in itertools.product(range(1, k + 1), repeat=m):
                    yield f"forbid({format_word(gamma)}) {tag}", SetSpec(
                        p, ForbidCyclicSubstring(gamma)), None
    p = Params(2, 3)
    left = SetSpec(p, Explicit(((1, 1), (1, 3), (3, 1), (3, 3))))
    right = SetSpec(p, Explicit(((1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (3, 3))))
    yield "union of the T(2,3) pair", SetSpec(p, Union_(left, right)), (3, 3)
    yield "intersection of the T(2,3) pair", SetSpec(p, Intersection(left, right)), (3, 3)
