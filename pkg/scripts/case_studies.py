#!/usr/bin/env python
"""Rebuild every worked example: the greedy cycles, game traces and FKM cycles."""

from ucycle.core import parse_word as w
from ucycle.fkm import fkm_tokens, format_tokens
from ucycle.greedy import greedy_sequence, verify_universal_cycle
from ucycle.sets import (AscendingRotations, Full, IncreasableClosure, NoPrimes, SetSpec,
                         WordSet, materialize)
from ucycle.core import Params
from ucycle.warden import check_all, optimal_line, solve

SWW = ("1112 1121 1122 1211 1212 1221 1222 1322 2111 "
       "2112 2121 2122 2132 2211 2212 2213 2221 3221").split()


def show_greedy(label, s, alpha):
    r = greedy_sequence(s, alpha)
    v = verify_universal_cycle(r.stream, s)
    tail = "" if v.universal else "   missing: " + " ".join(
        "".join(map(str, x)) for x in sorted(v.missing))
    print(f"{label:<28} {r.display()}{tail}")


def main():
    s1 = materialize(SetSpec.of(3, 5, AscendingRotations()))
    s2 = materialize(SetSpec.of(2, 9, NoPrimes()))
    t42 = materialize(SetSpec.of(4, 2, Full()))
    t33 = materialize(SetSpec.of(3, 3, Full()))
    sww = WordSet.from_words(Params(4, 3), [w(x) for x in SWW])

    print("greedy cycles")
    show_greedy("ascending rotations T(3,5)", s1, w("534"))
    show_greedy("no primes T(2,9)", s2, w("99"))
    show_greedy("de Bruijn T(4,2)", t42, w("2222"))
    closure = materialize(SetSpec.of(3, 4, IncreasableClosure(w("143"))))
    for a in ("143", "314", "431"):
        show_greedy(f"below rotations of 143, a={a}", closure, w(a))

    print("\noptimal lines")
    for label, s, alpha, start in [("T(4,2)", t42, "2222", "2212"), ("no primes", s2, "99", "82")]:
        t = solve(s, w(alpha))
        moves = optimal_line(w(start), t)
        print(f"{label}: r({start}) = {len(moves)}")
        for m in moves[:4]:
            print("   ", m)
        print("    checks:", ", ".join(str(r) for r in check_all(s, w(alpha), t)))

    print("\nFKM")
    print("T(3,3):        ", format_tokens(fkm_tokens(t33)))
    print("T(4,3) subset: ", format_tokens(fkm_tokens(sww)))


if __name__ == "__main__":
    main()
