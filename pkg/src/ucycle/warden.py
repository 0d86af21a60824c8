"""The warden's game: remoteness solver, optimal play, and structural checks.

Positions are members of a rotation-closed set. Each move takes the rightmost
symbol to the front. The warden may lower it; otherwise he passes and the
prisoner moves it unchanged or raised. The prisoner wins when a move lands on
the goal ``alpha``; ``alpha`` counts as 0 only when reached, and as a start
position it has its own (maximal) remoteness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import Word, format_word
from .greedy import greedy_sequence
from .increase import increasable_set
from .sets import WordSet, is_rotation_closed

INFINITE = math.inf

WARDEN = "warden-decrease"
PRISONER = "prisoner-after-pass"


class NotRotationClosed(ValueError):
    pass


class LosingPosition(ValueError):
    """The position has infinite remoteness, so no winning line exists."""


@dataclass(frozen=True)
class MoveRecord:
    source: Word
    target: Word
    mover: str
    symbol_change: tuple[int, int]

    def __str__(self) -> str:
        old, new = self.symbol_change
        return f"{format_word(self.source)} -> {format_word(self.target)}  {self.mover} ({old}->{new})"


def legal_moves(p: Sequence[int], s: WordSet) -> tuple[list[MoveRecord], list[MoveRecord]]:
    p = tuple(p)
    if p not in s:
        raise ValueError(f"{format_word(p)} is not a legal position")
    gamma, last = p[:-1], p[-1]
    warden, prisoner = [], []
    for b in range(1, s.k + 1):
        q = (b,) + gamma
        if q not in s:
            continue
        if b < last:
            warden.append(MoveRecord(p, q, WARDEN, (last, b)))
        else:
            prisoner.append(MoveRecord(p, q, PRISONER, (last, b)))
    return warden, prisoner


@dataclass
class RemotenessTable:
    wordset: WordSet
    alpha: Word
    r: dict[Word, float] = field(repr=False)

    @property
    def r_alpha_start(self) -> int:
        return int(self.r[self.alpha])

    def __getitem__(self, w: Sequence[int]) -> float:
        return self.r[tuple(w)]

    def after_move(self, w: Word) -> float:
        """Remoteness of ``w`` when reached by a move (0 for the goal)."""
        return 0 if w == self.alpha else self.r[w]

    def finite(self) -> dict[Word, int]:
        return {w: int(v) for w, v in self.r.items() if v != INFINITE}

    def infinite(self) -> set[Word]:
        return {w for w, v in self.r.items() if v == INFINITE}

    def lines(self) -> Iterator[str]:
        k = self.wordset.k
        for w in sorted(self.r):
            v = self.r[w]
            yield f"{format_word(w, k)}\t{'INF' if v == INFINITE else int(v)}"


@dataclass
class Report:
    name: str
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return f"{self.name}: {status}"


# -- solving ----------------------------------------------------------------


def _move_graph(s: WordSet) -> tuple[list[int], dict[int, list[int]], dict[int, list[int]]]:
    p = s.params
    k, high = p.k, p.k ** (p.n - 1)
    members = [int(i) for i in s.indices()]
    warden: dict[int, list[int]] = {}
    prisoner: dict[int, list[int]] = {}
    for i in members:
        last, front = i % k, i // k
        warden[i] = [b * high + front for b in range(last) if s.mask[b * high + front]]
        prisoner[i] = [b * high + front for b in range(last, k) if s.mask[b * high + front]]
    return members, warden, prisoner


def _check_inputs(s: WordSet, alpha: Word) -> None:
    if s.cardinality == 0:
        raise ValueError("the game needs a nonempty set of positions")
    if alpha not in s:
        raise ValueError(f"goal {format_word(alpha)} is not a legal position")
    if not is_rotation_closed(s):
        raise NotRotationClosed("the set of positions must be closed under rotations")


def solve(s: WordSet, alpha: Sequence[int], method: str = "sweep") -> RemotenessTable:
    """Remoteness of every position under optimal play.

    ``method="sweep"`` relaxes the max/min recurrence from all-infinite until
    nothing changes; ``"retrograde"`` resolves positions level by level outward
    from the goal. Both give the same table.
    """
    alpha = tuple(alpha)
    _check_inputs(s, alpha)
    if method == "sweep":
        values = _solve_sweep(s, alpha)
    elif method == "retrograde":
        values = _solve_retrograde(s, alpha)
    else:
        raise ValueError(f"unknown method {method!r}")
    word = s.params.word
    r = {word(i): (INFINITE if v is None else v) for i, v in values.items()}
    return RemotenessTable(s, alpha, r)


def _solve_sweep(s: WordSet, alpha: Word) -> dict[int, int | None]:
    members, warden, prisoner = _move_graph(s)
    goal = s.params.index(alpha)
    cap = len(members)
    inf = cap + 1
    r = {i: inf for i in members}

    def g(j: int) -> int:
        return 0 if j == goal else r[j]

    for _ in range(cap + 2):
        changed = False
        for i in members:
            val = 1 + min(g(q) for q in prisoner[i])
            for w in warden[i]:
                val = max(val, 1 + g(w))
            if val > cap:
                val = inf
            if val != r[i]:
                r[i] = val
                changed = True
        if not changed:
            break
    else:
        raise AssertionError("relaxation did not converge")
    return {i: (None if v == inf else v) for i, v in r.items()}


def _solve_retrograde(s: WordSet, alpha: Word) -> dict[int, int | None]:
    members, warden, prisoner = _move_graph(s)
    goal = s.params.index(alpha)
    known: dict[int, int] = {goal: 0}  # remoteness when reached by a move
    r: dict[int, int | None] = {i: None for i in members}
    level = 0
    while True:
        level += 1
        fresh = []
        for i in members:
            if r[i] is not None:
                continue
            if any(w not in known for w in warden[i]):
                continue
            reached = [known[q] for q in prisoner[i] if q in known]
            if not reached:
                continue
            val = max([1 + min(reached)] + [1 + known[w] for w in warden[i]])
            assert val == level, (val, level)
            fresh.append(i)
        if not fresh:
            break
        for i in fresh:
            r[i] = level
            if i != goal:
                known[i] = level
    return r


# -- optimal play -----------------------------------------------------------


def optimal_move(p: Sequence[int], t: RemotenessTable) -> MoveRecord:
    p = tuple(p)
    rp = t[p]
    if rp == INFINITE:
        raise LosingPosition(f"{format_word(p)} has infinite remoteness")
    warden, prisoner = legal_moves(p, t.wordset)
    best = [m for m in warden + prisoner if t.after_move(m.target) == rp - 1]
    if len(best) != 1:
        raise AssertionError(f"expected one optimal successor of {format_word(p)}, got {best}")
    return best[0]


def optimal_line(beta: Sequence[int], t: RemotenessTable) -> list[MoveRecord]:
    beta = tuple(beta)
    if t[beta] == INFINITE:
        raise LosingPosition(f"{format_word(beta)} has infinite remoteness")
    line = [optimal_move(beta, t)]
    while line[-1].target != t.alpha:
        line.append(optimal_move(line[-1].target, t))
    return line


# -- structural checks ------------------------------------------------------


def check_chain(t: RemotenessTable) -> Report:
    rep = Report("chain")
    finite = t.finite()
    values = sorted(finite.values())
    if not values:
        rep.violations.append("no finite remoteness at all")
        return rep
    seen: dict[int, Word] = {}
    for w, v in sorted(finite.items()):
        if v in seen:
            rep.violations.append(
                f"{format_word(seen[v])} and {format_word(w)} share remoteness {v}"
            )
        seen[v] = w
    if set(values) != set(range(1, values[-1] + 1)):
        gaps = sorted(set(range(1, values[-1] + 1)) - set(values))
        rep.violations.append(f"finite remoteness values have gaps at {gaps}")
    if t.r_alpha_start != values[-1]:
        rep.violations.append(
            f"goal has start remoteness {t.r_alpha_start}, maximum is {values[-1]}"
        )
    return rep


def check_monotonicity(t: RemotenessTable) -> Report:
    """r(gamma a1) <= r(gamma a2) for a1 < a2, strictly when both finite."""
    rep = Report("monotonicity")
    by_prefix: dict[Word, list[Word]] = {}
    for w in sorted(t.r):
        by_prefix.setdefault(w[:-1], []).append(w)
    for words in by_prefix.values():
        for i, lo in enumerate(words):
            for hi in words[i + 1 :]:
                a, b = t.r[lo], t.r[hi]
                if a > b or (a == b and a != INFINITE):
                    rep.violations.append(
                        f"r({format_word(lo)})={a} not below r({format_word(hi)})={b}"
                    )
    return rep


def check_warden_min_decrement(t: RemotenessTable) -> Report:
    rep = Report("warden minimal decrement")
    for p, v in sorted(t.finite().items()):
        move = optimal_move(p, t)
        if move.mover != WARDEN:
            continue
        warden, _ = legal_moves(p, t.wordset)
        best = max(m.symbol_change[1] for m in warden)
        if move.symbol_change[1] != best:
            rep.violations.append(
                f"{format_word(p)}: warden lowers to {move.symbol_change[1]}, "
                f"smallest decrement gives {best}"
            )
    return rep


def check_theorem1(
    s: WordSet, alpha: Sequence[int], t: RemotenessTable | None = None
) -> Report:
    """Finite remoteness coincides with being increasable to a rotation of alpha."""
    alpha = tuple(alpha)
    t = t or solve(s, alpha)
    rep = Report("winnable = increasable")
    winning = set(t.finite())
    inc = set(increasable_set(s, alpha))
    for w in sorted(winning ^ inc):
        side = "finite but not increasable" if w in winning else "increasable but infinite"
        rep.violations.append(f"{format_word(w)}: {side}")
    return rep


def check_theorem2(
    s: WordSet, alpha: Sequence[int], t: RemotenessTable | None = None
) -> Report:
    """The j-th greedy window has remoteness j, and greedy covers exactly the winners."""
    alpha = tuple(alpha)
    t = t or solve(s, alpha)
    rep = Report("greedy = game chain")
    res = greedy_sequence(s, alpha)
    if not res.completed:
        rep.violations.append("greedy run did not return to the goal")
    for j, beta in enumerate(res.betas, start=1):
        if t.r[beta] != j:
            rep.violations.append(f"window {j} is {format_word(beta)} with remoteness {t.r[beta]}")
    if res.covered != set(t.finite()):
        rep.violations.append("greedy windows differ from the finite-remoteness positions")
    return rep


def check_all(s: WordSet, alpha: Sequence[int], t: RemotenessTable | None = None) -> list[Report]:
    alpha = tuple(alpha)
    t = t or solve(s, alpha)
    return [
        check_chain(t),
        check_monotonicity(t),
        check_warden_min_decrement(t),
        check_theorem1(s, alpha, t),
        check_theorem2(s, alpha, t),
    ]
