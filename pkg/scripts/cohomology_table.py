#!/usr/bin/env python3
"""Tabulate graded HL^1 and HL^2 dimensions of W by weight."""

import argparse

from wittleibniz.cohomology import h1_report, h2_report
from wittleibniz.verify import IndexWindow


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--window", type=IndexWindow.parse, default=IndexWindow(-10, 10))
    ap.add_argument("--max-weight", type=int, default=3)
    args = ap.parse_args()
    print(f"{'s':>3} {'Z1':>4} {'B1':>4} {'H1':>3} {'Z2':>4} {'B2':>4} {'H2':>3}")
    for s in range(-args.max_weight, args.max_weight + 1):
        h1, h2 = h1_report(s, args.window), h2_report(s, args.window)
        print(f"{s:>3} {h1.cocycle_dim:>4} {h1.coboundary_dim:>4} {h1.h_dim:>3} "
              f"{h2.cocycle_dim:>4} {h2.coboundary_dim:>4} {h2.h_dim:>3}")


if __name__ == "__main__":
    main()
