#!/usr/bin/env python3
"""Compare the printed family IV recursions with the solved beta = -1 system."""

import argparse
import json

from wittleibniz.families import iv_discrepancies
from wittleibniz.gamma_solver import iv_agreement
from wittleibniz.verify import IndexWindow


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--window", type=IndexWindow.parse, default=IndexWindow(-6, 6))
    args = ap.parse_args()
    print(json.dumps(iv_agreement(args.window), sort_keys=True))
    rows = iv_discrepancies(args.window)
    print(f"{len(rows)} entries where the printed recursion differs from gamma = j")
    for row in rows[:20]:
        print("  ", row)


if __name__ == "__main__":
    main()
