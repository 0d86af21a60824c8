"""Command-line interface.

Exit codes: 0 success or property holds, 1 verification failed or a
counterexample was found, 2 usage or spec error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import fkm, greedy, harness, increase, warden
from .core import WordError, format_word, parse_word, rotations
from .fkm import max_necklace
from .sets import SpecError, WordSet, load_spec, materialize


class UsageError(Exception):
    pass


def _load_set(arg: str | None) -> WordSet:
    if arg is None:
        raise UsageError("--spec is required")
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith("{"):
        text = arg
    else:
        try:
            text = Path(arg).read_text()
        except OSError as e:
            raise UsageError(f"cannot read spec {arg}: {e.strerror}") from None
    return materialize(load_spec(text))


def _word(s: WordSet, text: str) -> tuple[int, ...]:
    return s.params.check(parse_word(text, s.k))


def _alpha(s: WordSet, text: str | None, necklace_default: bool = False) -> tuple[int, ...]:
    if text is not None:
        return _word(s, text)
    if necklace_default:
        return max_necklace(s)
    return s.params.top()


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_greedy(args, s: WordSet) -> int:
    alpha = _alpha(s, args.alpha)
    res = greedy.greedy_sequence(s, alpha)
    verdict = greedy.verify_universal_cycle(res.stream, s)
    ok = res.completed and verdict.universal
    missing = [format_word(w, s.k) for w in sorted(verdict.missing)]
    if args.format == "json":
        _emit({
            "alpha": format_word(alpha, s.k),
            "stream": format_word(res.stream, s.k),
            "completed": res.completed,
            "universal": ok,
            "missing": missing,
        })
    else:
        print(res.display())
        if not res.completed:
            print("stuck before returning to alpha")
        if missing:
            print("missing: " + " ".join(missing))
    return 0 if ok else 1


def cmd_verify(args, s: WordSet) -> int:
    if args.cycle is None:
        raise UsageError("--cycle is required")
    cycle = parse_word(args.cycle, s.k)
    v = greedy.verify_universal_cycle(cycle, s)
    out = {
        "universal": v.universal,
        "length_matches": v.length_matches,
        "missing": [format_word(w, s.k) for w in sorted(v.missing)],
        "duplicated": [format_word(w, s.k) for w in sorted(v.duplicated)],
    }
    if args.format == "json":
        _emit(out)
    else:
        print("universal" if v.universal else "not universal")
        if not v.length_matches:
            print(f"length {len(cycle)} != |S| = {s.cardinality}")
        for key in ("missing", "duplicated"):
            if out[key]:
                print(f"{key}: " + " ".join(out[key]))
    return 0 if v.universal else 1


def cmd_increasable(args, s: WordSet) -> int:
    alpha = _alpha(s, args.alpha)
    if args.word is not None:
        w = _word(s, args.word)
        found, path = increase.increasable_to(w, rotations(alpha), s, unit=args.unit)
        if args.format == "json":
            _emit({"word": format_word(w, s.k), "increasable": found,
                   "path": [format_word(p, s.k) for p in path or []]})
        else:
            print("true" if found else "false")
            for p in path or []:
                print(format_word(p, s.k))
        return 0 if found else 1
    inc = increase.increasable_set(s, alpha, unit=args.unit)
    words = [format_word(w, s.k) for w in inc]
    if args.format == "json":
        _emit({"alpha": format_word(alpha, s.k), "increasable": words})
    else:
        print("\n".join(words))
    return 0


def cmd_game_solve(args, s: WordSet) -> int:
    alpha = _alpha(s, args.alpha)
    t = warden.solve(s, alpha, method=args.method)
    reports = warden.check_all(s, alpha, t)
    if args.format == "json":
        _emit({
            "alpha": format_word(alpha, s.k),
            "r_alpha_start": t.r_alpha_start,
            "remoteness": {format_word(w, s.k): (None if v == warden.INFINITE else int(v))
                           for w, v in sorted(t.r.items())},
            "checks": {r.name: r.violations for r in reports},
        })
    else:
        for line in t.lines():
            print(line)
        for r in reports:
            print(r, file=sys.stderr)
            for v in r.violations:
                print("  " + v, file=sys.stderr)
    return 0 if all(r.ok for r in reports) else 1


def cmd_game_line(args, s: WordSet) -> int:
    alpha = _alpha(s, args.alpha)
    if args.source is None:
        raise UsageError("--from is required")
    beta = _word(s, args.source)
    t = warden.solve(s, alpha)
    try:
        line = warden.optimal_line(beta, t)
    except warden.LosingPosition as e:
        print(f"no winning line: {e}", file=sys.stderr)
        return 1
    if args.format == "json":
        _emit([{"from": format_word(m.source, s.k), "to": format_word(m.target, s.k),
                "mover": m.mover, "symbol_change": list(m.symbol_change)} for m in line])
    else:
        for m in line:
            print(f"{format_word(m.source, s.k)}\t{format_word(m.target, s.k)}\t{m.mover}"
                  f"\t{m.symbol_change[0]}->{m.symbol_change[1]}")
    return 0


def cmd_fkm(args, s: WordSet) -> int:
    tokens = fkm.fkm_tokens(s)
    cycle = fkm.fkm_cycle(s)
    verdict = greedy.verify_universal_cycle(cycle, s)
    ok = verdict.universal
    out = {
        "tokens": fkm.format_tokens(tokens, s.k),
        "cycle": format_word(cycle.symbols, s.k),
        "universal": verdict.universal,
        "missing": [format_word(w, s.k) for w in sorted(verdict.missing)],
    }
    if args.check_greedy_equal:
        alpha = _alpha(s, args.alpha, necklace_default=True)
        same = fkm.fkm_equals_greedy(s, alpha)
        out["greedy_equal"] = same
        ok = ok and same
    if args.format == "json":
        _emit(out)
    else:
        print(out["tokens"])
        print(out["cycle"])
        print("universal" if verdict.universal else "not universal")
        if "greedy_equal" in out:
            print("greedy-equal" if out["greedy_equal"] else "differs from greedy")
    return 0 if ok else 1


def _report(rep: harness.SweepReport) -> int:
    body = rep.jsonl()
    if body:
        print(body)
    print(rep.summary(), file=sys.stderr)
    return 0 if rep.ok else 1


def cmd_sweep(args) -> int:
    if args.sweep == "conjecture1":
        return _report(harness.conjecture1_sweep(args.k, args.n_max, args.m_max))
    if args.sweep == "conjecture2":
        return _report(harness.conjecture2_sweep(
            args.n, args.k, args.trials, args.seed, exhaustive=args.exhaustive))
    return _report(harness.forbidden_suffix_cases(args.n))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", help="set spec: JSON file, inline JSON, or - for stdin")
    common.add_argument("--alpha", help="start / goal word")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="ucycle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("greedy", parents=[common], help="run the greedy construction")
    p = sub.add_parser("verify", parents=[common], help="check a cycle against a set")
    p.add_argument("--cycle")
    p = sub.add_parser("increasable", parents=[common], help="increasability queries")
    p.add_argument("--word", help="test a single word and print a witness path")
    p.add_argument("--unit", action="store_true", help="only allow +1 increases")

    game = sub.add_parser("game", help="warden's game solver").add_subparsers(
        dest="game", required=True)
    p = game.add_parser("solve", parents=[common])
    p.add_argument("--method", choices=("sweep", "retrograde"), default="sweep")
    p = game.add_parser("line", parents=[common])
    p.add_argument("--from", dest="source")

    p = sub.add_parser("fkm", parents=[common], help="necklace concatenation")
    p.add_argument("--check-greedy-equal", action="store_true")

    sweep = sub.add_parser("sweep", help="counterexample sweeps").add_subparsers(
        dest="sweep", required=True)
    p = sweep.add_parser("conjecture1")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--m-max", type=int, default=2)
    p = sweep.add_parser("conjecture2")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p = sweep.add_parser("forbidden-suffix")
    p.add_argument("--n", type=int, default=4)

    demo = sub.add_parser("demo", help="fixed demonstrations").add_subparsers(
        dest="demo", required=True)
    demo.add_parser("union-intersection")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "sweep":
            return cmd_sweep(args)
        if args.command == "demo":
            return _report(harness.union_intersection_demo())
        s = _load_set(args.spec)
        if args.command == "game":
            return cmd_game_solve(args, s) if args.game == "solve" else cmd_game_line(args, s)
        handler = {
            "greedy": cmd_greedy,
            "verify": cmd_verify,
            "increasable": cmd_increasable,
            "fkm": cmd_fkm,
        }[args.command]
        return handler(args, s)
    except (UsageError, SpecError, WordError, warden.NotRotationClosed, ValueError) as e:
        print(f"ucycle: error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
