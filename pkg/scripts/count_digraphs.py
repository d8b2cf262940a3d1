#!/usr/bin/env python3
"""Enumerate every valid digraph of ideals over small finite rings.

This is the desk-scale demonstration that the collection of all sheaves of
ideals on Spec(R) is a finite set for finite R: nodes are drawn from the
(distinguished open, ideal) vocabulary and filtered by the five digraph
invariants.

Usage:
    python3 scripts/count_digraphs.py [--max-n N]
"""

import argparse
import time

from noether.digraph import count_digraph_space
from noether.finite import zmod


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=8)
    args = parser.parse_args()

    print(f"{'ring':<8} {'digraphs':<10} seconds")
    for n in range(2, args.max_n + 1):
        started = time.perf_counter()
        count = count_digraph_space(zmod(n))
        seconds = time.perf_counter() - started
        print(f"Z/{n:<6} {count:<10} {seconds:.2f}")


if __name__ == "__main__":
    main()
