#!/usr/bin/env python3
"""Sweep the law suite across generator scales and print a pass/fail grid.

Each (n, max_order) cell runs every registered law at the given trial
count.  Exits nonzero if any cell fails, so this doubles as a coarse
regression driver.
"""

import argparse
import itertools
import sys

from weylcalc.laws import GenConfig, run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=25)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--coeff-degree", type=int, default=3)
    ap.add_argument("--coeff-bound", type=int, default=5)
    args = ap.parse_args()

    print(f"{'n':>3} {'max_order':>9} {'laws':>5} {'failures':>8} {'time':>8}")
    any_bad = False
    for n, max_order in itertools.product((1, 2, 3), (1, 2, 3)):
        cfg = GenConfig(
            n=n,
            max_order=max_order,
            max_coeff_degree=args.coeff_degree,
            coeff_bound=args.coeff_bound,
            trials=args.trials,
            seed=args.seed,
        )
        reports = run_all(cfg)
        bad = [r for r in reports if not r.passed]
        elapsed = sum(r.elapsed for r in reports)
        status = "ok" if not bad else "FAIL " + ",".join(r.law for r in bad)
        print(f"{n:>3} {max_order:>9} {len(reports):>5} {len(bad):>8} {elapsed:>7.2f}s  {status}")
        for r in bad:
            any_bad = True
            for line in r.failures:
                print(f"      {r.law}: {line}")
    return 1 if any_bad else 0


if __name__ == "__main__":
    sys.exit(main())
