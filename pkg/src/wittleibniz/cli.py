"""Command-line entry point.

Exit codes: 0 success, 1 verification failures or mismatch, 2 usage or
contract errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cohomology import h1_report, h2_report
from .core import ContractError, ModuleParams, is_reducible
from .families import (DomainError, FamilyId, a_coeff, b_coeff_II, b_coeff_IV, build_table,
                       default_params, records_csv, records_latex, table_records)
from .gamma_solver import run_solver
from .scalar import ScalarParseError, parse_scalar
from .verify import ALL_KINDS, IndexWindow, verify_module_axiom, verify_window


class UsageError(Exception):
    pass


def _window(text: str) -> IndexWindow:
    try:
        return IndexWindow.parse(text)
    except ContractError as e:
        raise argparse.ArgumentTypeError(str(e))


def _scalar(text: str):
    try:
        return parse_scalar(text)
    except ScalarParseError as e:
        raise argparse.ArgumentTypeError(str(e))


def _add_family(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", required=required,
                   help="thm1 | I | II | III | IV (also x0, x2)")
    p.add_argument("--alpha", type=_scalar, default=None)
    p.add_argument("--beta", type=_scalar, default=None)
    p.add_argument("--norm", type=_scalar, default=parse_scalar("1"),
                   help="normalization gamma_{2,1} (default 1)")


def _add_output(p: argparse.ArgumentParser, tabular: bool) -> None:
    if tabular:
        p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wittleibniz",
                                 description="Leibniz algebras on W + V(alpha, beta), exactly.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="multiplication table records [d_i, d_j]")
    _add_family(p)
    p.add_argument("--window", type=_window, default=IndexWindow(-3, 3))
    _add_output(p, True)

    p = sub.add_parser("verify", help="Leibniz identity sweep over basis triples")
    _add_family(p)
    p.add_argument("--window", type=_window, default=IndexWindow(-10, 10))
    p.add_argument("--kinds", default=",".join(ALL_KINDS))
    p.add_argument("--workers", type=int, default=1)
    _add_output(p, False)

    p = sub.add_parser("module-check", help="right-module axiom sweep for V(alpha, beta)")
    p.add_argument("--alpha", type=_scalar, required=True)
    p.add_argument("--beta", type=_scalar, required=True)
    p.add_argument("--window", type=_window, default=IndexWindow(-8, 8))
    _add_output(p, False)

    p = sub.add_parser("solve", help="solve the constraint system for gamma")
    p.add_argument("--alpha", type=_scalar, default=parse_scalar("0"))
    p.add_argument("--beta", type=_scalar, required=True)
    p.add_argument("--mode", choices=("reduced", "full"), default="reduced")
    p.add_argument("--gauge", choices=("fixed", "quotient"), default=None)
    p.add_argument("--window", type=_window, default=IndexWindow(-6, 6))
    p.add_argument("--module-window", type=_window, default=None)
    _add_output(p, False)

    p = sub.add_parser("coeff", help="query a_i or b_{i,j}")
    p.add_argument("--family", default="II", help="II or IV")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--a", type=int, metavar="I")
    g.add_argument("--b", type=int, nargs=2, metavar=("I", "J"))
    p.add_argument("--sign", choices=("minus", "plus"), default="minus",
                   help="family II superdiagonal variant")

    p = sub.add_parser("cohomology", help="graded HL^1 / HL^2 dimension on a window")
    p.add_argument("--degree", type=int, choices=(1, 2), required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--window", type=_window, default=IndexWindow(-10, 10))
    _add_output(p, False)

    p = sub.add_parser("reducible", help="Kac reducibility of V(alpha, beta)")
    p.add_argument("--alpha", type=_scalar, required=True)
    p.add_argument("--beta", type=_scalar, required=True)
    return ap


def _table(args):
    if args.alpha is None:
        raise UsageError("--alpha is required")
    family = FamilyId.parse(args.family)
    return build_table(family, default_params(family, args.alpha, args.beta), args.norm)


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _run(args) -> int:
    cmd = args.command
    if cmd == "table":
        recs = table_records(_table(args), args.window)
        fmt = args.format
        text = _dumps(recs) if fmt == "json" else records_csv(recs) if fmt == "csv" else records_latex(recs)
        _emit(text, args.out)
        return 0
    if cmd == "verify":
        kinds = [k.strip() for k in args.kinds.split(",") if k.strip()]
        rep = verify_window(_table(args), args.window, kinds, workers=args.workers)
        _emit(rep.dumps(), args.out)
        return 0 if rep.ok else 1
    if cmd == "module-check":
        rep = verify_module_axiom(ModuleParams(args.alpha, args.beta), args.window)
        _emit(rep.dumps(), args.out)
        return 0 if rep.ok else 1
    if cmd == "solve":
        if args.mode == "full" and args.module_window is None:
            raise UsageError("--mode full needs --module-window")
        rep = run_solver(args.mode, ModuleParams(args.alpha, args.beta), args.window,
                         args.module_window, args.gauge)
        _emit(rep.dumps(), args.out)
        return 0
    if cmd == "coeff":
        fam = FamilyId.parse(args.family)
        if args.a is not None:
            if fam is not FamilyId.II:
                raise UsageError("a_i is only defined for family II")
            val = a_coeff(args.a)
        elif fam is FamilyId.II:
            val = b_coeff_II(*args.b, sign=-1 if args.sign == "minus" else 1)
        elif fam is FamilyId.IV:
            val = b_coeff_IV(*args.b)
        else:
            raise UsageError("b_{i,j} is only defined for families II and IV")
        print(val)
        return 0
    if cmd == "cohomology":
        rep = (h1_report if args.degree == 1 else h2_report)(args.weight, args.window)
        _emit(rep.dumps(), args.out)
        return 0
    if cmd == "reducible":
        print("true" if is_reducible(ModuleParams(args.alpha, args.beta)) else "false")
        return 0
    raise UsageError(f"unknown command {cmd}")


_VALUE_FLAGS = {"--window", "--module-window", "--alpha", "--beta", "--norm", "--weight", "--a"}


def _glue_negative_values(argv: list) -> list:
    """Turn ``--window -10..10`` into ``--window=-10..10`` so argparse accepts it."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: list | None = None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        return _run(args)
    except (UsageError, ContractError, DomainError, ScalarParseError) as e:
        print(f"wittleibniz {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
