#!/usr/bin/env python3
"""Run the full verification battery and print a one-line summary per check.

Usage: python scripts/run_full_harness.py [--n 3] [--trials 50] [--seed 7]
       [--skip-bp]
"""

import argparse
import json
import sys
import time

from minkval.checks import run_all
from minkval.randgen import TrialConfig


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--skip-bp", action="store_true")
    ap.add_argument("--json", action="store_true", help="emit raw JSON reports")
    args = ap.parse_args()

    cfg = TrialConfig(n=args.n, trials=args.trials, seed=args.seed)
    t0 = time.perf_counter()

    def progress(rep):
        if args.json:
            print(json.dumps(rep.to_dict()), flush=True)
        else:
            print(f"[{time.perf_counter() - t0:7.1f}s] {rep.verdict.upper():12s} {rep.check}", flush=True)

    reports = run_all(cfg, include_bp=not args.skip_bp, progress=progress)
    bad = [r for r in reports if not r.ok]
    print(f"\n{len(reports)} checks, {len(bad)} failures, {time.perf_counter() - t0:.1f}s")
    for r in bad:
        print(f"  FAILED {r.check}: {json.dumps(r.to_dict().get('witness'))}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
