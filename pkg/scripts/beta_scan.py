#!/usr/bin/env python3
"""Scan beta and report solution counts of the reduced and full constraint systems.

Columns: reduced nullity with the gauge fixed, and the full-mode quotient
dimension (kernel modulo gauge moves) for alpha = 0 and alpha = 1/2.
"""

import argparse

from wittleibniz.core import ModuleParams
from wittleibniz.gamma_solver import build_reduced_system, run_solver, solve
from wittleibniz.scalar import parse_scalar
from wittleibniz.verify import IndexWindow

DEFAULT_BETAS = "-2,-1,-1/2,0,1/2,1,3/2,2,5/2,3,7/2,4,5"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--betas", default=DEFAULT_BETAS)
    ap.add_argument("--window", type=IndexWindow.parse, default=IndexWindow(-6, 6))
    ap.add_argument("--full-window", type=IndexWindow.parse, default=IndexWindow(-4, 4))
    ap.add_argument("--module-window", type=IndexWindow.parse, default=IndexWindow(-8, 8))
    args = ap.parse_args()
    print(f"{'beta':>6} {'reduced':>8} {'full a=0':>9} {'full a=1/2':>11}")
    for text in args.betas.split(","):
        beta = parse_scalar(text)
        red = solve(build_reduced_system(beta, args.window, "fixed")).nullity
        full = [run_solver("full", ModuleParams(a, beta), args.full_window,
                           args.module_window).quotient_dim for a in ("0", "1/2")]
        print(f"{text:>6} {red:>8} {full[0]:>9} {full[1]:>11}")


if __name__ == "__main__":
    main()
