"""Command-line interface.

Exit status is 0 on success, 2 for invalid input and 3 when an enumeration
budget is exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .affperm import Diagram, format_window, parse_window
from .bridge import (
    KBruhatInterval,
    f_from_cylindric_shape,
    f_from_interval,
    schubert_times_schur,
    three_row_decompose,
    toric_gw_expand,
)
from .cylindric import CylindricSkewShape
from .errors import BudgetExceeded, PositroidError
from .lstree import expand, trace
from .oracle.schur_module import DEFAULT_CELL_BUDGET, schur_module_character
from .oracle.stanley import DEFAULT_LENGTH_BUDGET
from .schurring import SchurVector, format_partition
from .verify import VerificationFailure, run_all


def _terms_text(terms) -> str:
    terms = sorted(terms)
    if not terms:
        return "0"
    return "\n".join(f"{c} * s{format_partition(lam)}" for lam, c in terms)


def _terms_json(terms) -> list:
    return [{"partition": list(lam), "coeff": c} for lam, c in sorted(terms)]


def _perm(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise PositroidError(f"bad permutation {text!r}") from exc


def _read_diagram(value: str) -> Diagram:
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            value = fh.read()
    return Diagram.from_text(value)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_expand(args) -> int:
    f = parse_window(args.window, args.n)
    if args.trace:
        print(trace(f, args.k, args.n))
        return 0
    result = expand(f, args.k, args.n, threads=args.threads)
    _emit(args, result.to_dict(), _terms_text(result.result))
    return 0


def cmd_trace(args) -> int:
    print(trace(parse_window(args.window, args.n), args.k, args.n))
    return 0


def cmd_interval(args) -> int:
    interval = KBruhatInterval(_perm(args.u), _perm(args.v), args.k)
    f = f_from_interval(interval)
    coeffs = schubert_times_schur(interval)
    payload = {"u": list(interval.u), "v": list(interval.v), "k": interval.k,
               "window": list(f.window), "terms": _terms_json(coeffs.items())}
    _emit(args, payload, f"f = {format_window(f)}\n" + _terms_text(coeffs.items()))
    return 0


def cmd_toric(args) -> int:
    shape = CylindricSkewShape(args.k, args.n, args.lower, args.upper, args.offset)
    f = f_from_cylindric_shape(shape)
    result = toric_gw_expand(shape, threads=args.threads)
    payload = result.to_dict()
    payload.update(window=list(f.window), n=shape.n)
    _emit(args, payload, f"f = {format_window(f)}\n" + _terms_text(result))
    return 0


def cmd_three_row(args) -> int:
    coeffs = three_row_decompose(_read_diagram(args.diagram), args.dim_v,
                                 threads=args.threads)
    _emit(args, {"dim_v": args.dim_v, "terms": _terms_json(coeffs.items())},
          _terms_text(coeffs.items()))
    return 0


def cmd_schur_module(args) -> int:
    budget = DEFAULT_CELL_BUDGET if args.budget is None else args.budget
    result = schur_module_character(_read_diagram(args.diagram), args.k, budget=budget)
    _emit(args, result.to_dict(), _terms_text(result))
    return 0


def cmd_verify(args) -> int:
    budget = DEFAULT_LENGTH_BUDGET if args.budget is None else args.budget
    try:
        checked = run_all(args.max_n, budget, args.threads)
    except VerificationFailure as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    print(f"OK: {checked} permutations cross-checked")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="positroid",
        description="Schur expansions of positroid classes and their applications.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, threads=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if threads:
            p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("expand", help="Schur expansion of G_f")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--window", required=True, help="e.g. 5,2,7,4")
    p.add_argument("--trace", action="store_true", help="print the tree instead")
    common(p, threads=True)
    p.set_defaults(run=cmd_expand)

    p = sub.add_parser("trace", help="print the L-S tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--window", required=True)
    p.set_defaults(run=cmd_trace)

    p = sub.add_parser("interval", help="Schubert x Schur coefficients of [u,v]_k")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(run=cmd_interval)

    p = sub.add_parser("toric", help="toric Schur polynomial of a cylindric shape")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lower", required=True, help="V/H word")
    p.add_argument("--upper", required=True, help="V/H word")
    p.add_argument("--offset", type=int, default=0)
    common(p, threads=True)
    p.set_defaults(run=cmd_toric)

    p = sub.add_parser("three-row", help="decompose V[D] for a diagram with <= 3 rows")
    p.add_argument("--diagram", required=True, help='file or inline "1: 2,3; 2: 1,2"')
    p.add_argument("--dim-v", type=int, default=3)
    common(p, threads=True)
    p.set_defaults(run=cmd_three_row)

    p = sub.add_parser("schur-module", help="character of V[D] from symmetrizer ranks")
    p.add_argument("--diagram", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int)
    common(p)
    p.set_defaults(run=cmd_schur_module)

    p = sub.add_parser("verify", help="cross-check the tree against the oracles")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--budget", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return 3
    except PositroidError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
