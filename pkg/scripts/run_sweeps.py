#!/usr/bin/env python3
"""Run every verification statement at acceptance scale and write JSON-lines reports.

    python3 scripts/run_sweeps.py --out results --jobs 4
"""

import argparse
import json
import time
from pathlib import Path

from metaplectic.sweep import SweepConfig, run_sweep

GRID = {
    "main": dict(r=(1, 3), n=(1, 3), lambda_max=3),
    "tokuyama": dict(r=(1, 3), n=(1, 3), lambda_max=3),
    "classic": dict(r=(1, 3), lambda_max=4),
    "MN": dict(r=(1, 3), n=(1, 3), lambda_max=3),
    "F": dict(r=(1, 3), n=(1, 3), lambda_max=3),
    "longword": dict(r=(2, 3), n=(1, 3), samples=20),
    "branching": dict(r=(1, 3), n=(1, 3), lambda_max=3),
    "gauss": dict(n=(2, 4)),
}


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results")
    ap.add_argument("--jobs", type=int, default=0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--only", nargs="*", choices=sorted(GRID), default=None)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    failed_total = 0
    for name in args.only or GRID:
        cfg = SweepConfig(statement=name, jobs=args.jobs, seed=args.seed, **GRID[name]).validate()
        start = time.perf_counter()
        total = failed = 0
        with open(out / f"{name}.jsonl", "w") as fh:
            for rep in run_sweep(cfg):
                total += 1
                failed += not rep.passed
                fh.write(json.dumps(rep.to_json()) + "\n")
        failed_total += failed
        print(f"{name:<10} {total:>5} checks  {failed:>3} failed  {time.perf_counter() - start:7.2f}s")
    return 1 if failed_total else 0


if __name__ == "__main__":
    raise SystemExit(main())
