#!/usr/bin/env python3
"""Time the main-identity sweep as the weight bound grows, one rank at a time."""

import argparse
import time

from metaplectic.sweep import SweepConfig, run_sweep


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--r-max", type=int, default=3)
    ap.add_argument("--lambda-max", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=0)
    args = ap.parse_args()
    print(f"{'r':>2} {'bound':>5} {'checks':>7} {'failed':>6} {'seconds':>8}")
    for r in range(1, args.r_max + 1):
        for bound in range(0, args.lambda_max + 1):
            cfg = SweepConfig(statement="main", r=(r, r), n=(1, args.n_max), lambda_max=bound, jobs=args.jobs).validate()
            start = time.perf_counter()
            reps = list(run_sweep(cfg))
            bad = sum(not x.passed for x in reps)
            print(f"{r:>2} {bound:>5} {len(reps):>7} {bad:>6} {time.perf_counter() - start:8.2f}")


if __name__ == "__main__":
    main()
