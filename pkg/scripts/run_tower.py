#!/usr/bin/env python3
"""Run the cover-tower suite level by level and print a verdict table.

For each field and exponent rule this script builds the localized rings
k[x, 1/x, 1/(x^e - 2), ...], checks that x -> x^2 is a well-defined cover
map between consecutive levels, that pulled-back principal ideals grow
strictly, and that the pullback ideal sits properly below a maximal one.

Usage:
    python3 scripts/run_tower.py [--depth N] [--rule power|literal|both]
"""

import argparse
import sys
import time

from noether.fields import GF, QQ
from noether.tower import run_tower_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--depth", type=int, default=6)
    parser.add_argument("--rule", choices=("power", "literal", "both"),
                        default="both")
    args = parser.parse_args()

    rules = ("power", "literal") if args.rule == "both" else (args.rule,)
    fields = (("Q", QQ), ("F5", GF(5)))
    exit_code = 0
    print(f"{'field':<6} {'rule':<8} {'depth':<6} {'ok':<5} "
          f"{'failing level':<14} seconds")
    for rule in rules:
        for label, field in fields:
            started = time.perf_counter()
            rep = run_tower_suite(args.depth, field, rule)
            seconds = time.perf_counter() - started
            failing = rep.failing_level()
            print(f"{label:<6} {rule:<8} {args.depth:<6} "
                  f"{str(rep.ok):<5} {str(failing):<14} {seconds:.2f}")
            if not rep.ok:
                exit_code = 1
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
