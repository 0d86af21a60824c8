#!/usr/bin/env python
"""Larger counterexample sweeps, written as JSON lines to a directory."""

import argparse
import time
from pathlib import Path

from ucycle import harness


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("sweep_reports"))
    ap.add_argument("--k", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--m-max", type=int, default=3)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    jobs = [(f"conjecture1_k{k}", lambda k=k: harness.conjecture1_sweep(k, args.n_max, args.m_max))
            for k in args.k]
    jobs += [
        ("conjecture2_n4_k3", lambda: harness.conjecture2_sweep(4, 3, args.trials, args.seed)),
        ("conjecture2_n3_k4", lambda: harness.conjecture2_sweep(3, 4, args.trials, args.seed)),
        ("conjecture2_n3_k3_all", lambda: harness.conjecture2_sweep(3, 3, exhaustive=True)),
        ("conjecture2_n5_k2_all", lambda: harness.conjecture2_sweep(5, 2, exhaustive=True)),
    ]
    flagged = 0
    for name, job in jobs:
        start = time.perf_counter()
        rep = job()
        (args.out / f"{name}.jsonl").write_text(rep.jsonl() + "\n")
        flagged += len(rep.failures)
        print(f"{rep.summary()}  [{time.perf_counter() - start:.1f}s]")
    raise SystemExit(1 if flagged else 0)


if __name__ == "__main__":
    main()
