#!/usr/bin/env python3
"""Run the Leibniz identity sweep for every family and print a summary line each."""

import argparse
import time

from wittleibniz.families import FamilyId, build_table, default_params
from wittleibniz.verify import IndexWindow, verify_window

CASES = [(FamilyId.THM1, "1/2", "5/3"), (FamilyId.I, "5", "2"), (FamilyId.II, "0", None),
         (FamilyId.III, "2", None), (FamilyId.IV, "0", None), (FamilyId.X0, "0", None),
         (FamilyId.X2, "0", None)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--window", type=IndexWindow.parse, default=IndexWindow(-15, 15))
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    for family, alpha, beta in CASES:
        t = build_table(family, default_params(family, alpha, beta))
        start = time.perf_counter()
        rep = verify_window(t, args.window, workers=args.workers)
        print(f"{family.value:5s} alpha={alpha:4s} beta={t.params.beta!s:5s} "
              f"triples={rep.triples_checked:7d} failures={len(rep.failures):4d} "
              f"{time.perf_counter() - start:6.1f}s")


if __name__ == "__main__":
    main()
