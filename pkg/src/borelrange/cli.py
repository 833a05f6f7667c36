"""Command-line front end: ``borel-range {cprime,ranges,verify}``.

Exit status: 0 pass, 1 assertion violation, 2 usage/parse error,
3 mathematical precondition violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
import time
from contextlib import contextmanager
from typing import Callable, Sequence

from . import __version__
from .borel import (
    Mode,
    c_prime,
    c_prime_value,
    conjectured_c_prime,
    n_borel,
    verify_conjecture,
    verify_symmetry,
    verify_theorem_slstablerange,
)
from .combinatorics import ParseError, PreconditionError, bipartitions, parse_bipartition
from .ranges import LI_SUN_NOTE, vanishing_verdict
from .report import SweepReport
from .traceless import BudgetExceeded, sweep_decomposition, sweep_exactfilt, verify_dims

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

CITATIONS = {
    "borel": "Borel: stability and vanishing of the cohomology of arithmetic groups, improved constant C'",
    "kmp": "Kupers-Miller-Patzt: homological stability with polynomial VIC-module coefficients",
    "li_sun": LI_SUN_NOTE,
    "koike": "Koike: decomposition of traceless mixed tensors by bipartitions",
}

BOREL_CHECKS = ("theorem", "symmetry", "conjecture")
TENSOR_CHECKS = ("dims", "exactfilt", "decomposition")
CSV_HEADER = ["lambda", "lambda_prime", "n", "p", "c_prime", "conjectured", "n_b", "n_kmp", "n_0", "verdict"]
TENSOR_CSV_HEADER = ["n", "p", "q", "check", "lhs", "rhs", "ok"]


class UsageError(Exception):
    pass


def _bp(text: str):
    try:
        return parse_bipartition(text)
    except ParseError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, command: str, inputs: dict, result: dict, citations: Sequence[str], started: float,
          text: Callable[[], None]) -> None:
    if args.json:
        envelope = {
            "command": command,
            "input": inputs,
            "result": result,
            "meta": {
                "version": __version__,
                "citations": [CITATIONS[c] for c in citations],
                "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
            },
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        text()


def cmd_cprime(args) -> int:
    started = time.perf_counter()
    bp = _bp(args.bp)
    mode = Mode.INITIAL_SEGMENT if args.mode in ("fast", "initial-segment") else Mode.LITERAL
    res = c_prime(bp, args.n, mode)
    result = {
        "bp": str(bp),
        "n": args.n,
        "mode": mode.value,
        "c_prime": res.value,
        "bound": args.n // 2 - 1,
        "n_b": n_borel(bp),
        "conjectured": conjectured_c_prime(bp, args.n),
        "good_lengths": list(res.good_lengths),
    }
    if args.witness:
        result["witnesses"] = {str(q): list(t.permutation()) for q, t in sorted(res.witnesses.items())}

    def text() -> None:
        print(f"C'(SL({args.n},Q), V[{bp}]) = {res.value}   (floor(n/2)-1 = {result['bound']}, n_B = {result['n_b']})")
        if args.witness:
            for q, perm in result["witnesses"].items():
                print(f"  length {q}: sigma = {tuple(perm)} fails positivity")

    _emit(args, "cprime", {"bp": args.bp, "n": args.n, "mode": mode.value}, result, ["borel"], started, text)
    return EXIT_OK


def cmd_ranges(args) -> int:
    started = time.perf_counter()
    bp = _bp(args.bp)
    rep = vanishing_verdict(bp, args.p, args.n)
    result = rep.as_dict()

    def text() -> None:
        print(f"bipartition {bp}: |bp| = {bp.size}, deg = {bp.degree}, p = {args.p}")
        print(f"  n_B(bp)     = {rep.n_b}")
        print(f"  n_B(bp,p)   = {rep.n_b_p}")
        print(f"  n_KMP(bp,p) = {rep.n_kmp}")
        print(f"  n_0(bp,p)   = {rep.n_0}")
        if rep.verdict is not None:
            via = f" (via {', '.join(rep.branches)})" if rep.branches else ""
            print(f"  verdict at n = {args.n}: {rep.verdict.value}{via}")
        if rep.note:
            print(f"  note: {rep.note}")

    inputs = {"bp": args.bp, "p": args.p, "n": args.n}
    _emit(args, "ranges", inputs, result, ["borel", "kmp", "li_sun"], started, text)
    return EXIT_OK


def _grid_rows(max_size: int, max_n: int, p: int) -> list[list]:
    rows = []
    for bp in bipartitions(max_size):
        for n in range(2, max_n + 1):
            rep = vanishing_verdict(bp, p, n)
            if bp.length <= n:
                cp, conj = c_prime_value(bp, n), conjectured_c_prime(bp, n)
            else:
                cp = conj = ""
            rows.append([str(bp.lam), str(bp.lam_prime), n, p, cp, conj,
                         rep.n_b_p, rep.n_kmp, rep.n_0, rep.verdict.value])
    return rows


def _tensor_rows(rep: SweepReport) -> list[list]:
    rows = []
    for c in rep.cells:
        if rep.check == "dims":
            rows.append([c["n"], c["p"], c["q"], "dims", c["kernel"], c["formula"], c["ok"]])
        elif rep.check == "decomposition":
            rows.append([c["n"], c["p"], c["q"], "decomposition", c["kernel"], c["sum"], c["ok"]])
        else:
            for s in c["steps"]:
                rows.append([c["n"], c["p"], c["q"], f"exactfilt:l={s['l']}", s["lhs"], s["rhs"], s["ok"]])
    return rows


def _write_csv(path: str, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


@contextmanager
def _budget_env(budget: int | None):
    # set through the environment so pool workers inherit it
    if budget is None:
        yield
        return
    saved = os.environ.get("BOREL_RANGE_BUDGET")
    os.environ["BOREL_RANGE_BUDGET"] = str(budget)
    try:
        yield
    finally:
        if saved is None:
            del os.environ["BOREL_RANGE_BUDGET"]
        else:
            os.environ["BOREL_RANGE_BUDGET"] = saved


def cmd_verify(args) -> int:
    started = time.perf_counter()
    checks = BOREL_CHECKS + TENSOR_CHECKS if args.check == "all" else (args.check,)
    b_size = 3 if args.max_size is None else args.max_size
    b_n = 8 if args.max_n is None else args.max_n
    t_size = 4 if args.max_size is None else args.max_size
    t_n = 4 if args.max_n is None else args.max_n

    runners = {
        "theorem": lambda: verify_theorem_slstablerange(b_size, b_n, args.jobs),
        "symmetry": lambda: verify_symmetry(b_size, b_n, args.jobs),
        "conjecture": lambda: verify_conjecture(b_size, b_n, args.jobs),
        "dims": lambda: verify_dims(t_n, t_size, args.jobs),
        "exactfilt": lambda: sweep_exactfilt(t_n, t_size, args.jobs),
        "decomposition": lambda: sweep_decomposition(t_n, t_size, args.jobs),
    }
    with _budget_env(args.budget):
        reports = [runners[c]() for c in checks]

    if args.csv:
        if any(c in BOREL_CHECKS for c in checks):
            _write_csv(args.csv, CSV_HEADER, _grid_rows(b_size, b_n, args.p))
        else:
            _write_csv(args.csv, TENSOR_CSV_HEADER, [r for rep in reports for r in _tensor_rows(rep)])

    failed = any(not r.ok for r in reports if r.asserted)
    result = {
        "checks": [
            {
                "check": r.check,
                "cells": r.checked,
                "asserted": r.asserted,
                "violations": r.violations,
                "mismatches": r.mismatches,
                "ok": r.ok,
            }
            for r in reports
        ],
        "ok": not failed,
    }

    def text() -> None:
        print(f"{'check':<15}{'cells':>7}{'violations':>12}{'mismatches':>12}  status")
        for r in reports:
            status = "PASS" if r.ok else "FAIL"
            if not r.asserted:
                status = "REPORT" if r.mismatches else "PASS"
            print(f"{r.check:<15}{r.checked:>7}{len(r.violations):>12}{len(r.mismatches):>12}  {status}")
        for r in reports:
            for v in r.violations:
                print(f"  violation [{r.check}]: {v}")
            for m in r.mismatches:
                print(f"  finding [{r.check}]: {m}")

    inputs = {"check": args.check, "max_size": args.max_size, "max_n": args.max_n, "p": args.p}
    _emit(args, "verify", inputs, result, ["borel", "kmp", "koike"], started, text)
    return EXIT_VIOLATION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="borel-range", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cprime", help="Borel's improved constant C'(SL(n,Q), V_bp)")
    p.add_argument("--bp", required=True, help='bipartition, e.g. "3,1|2" or "0|0"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["literal", "fast", "initial-segment"], default="literal")
    p.add_argument("--witness", action="store_true", help="show one failing sigma per bad length")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cprime)

    p = sub.add_parser("ranges", help="n_B, n_KMP, n_0 and the vanishing verdict")
    p.add_argument("--bp", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ranges)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("check", choices=BOREL_CHECKS + TENSOR_CHECKS + ("all",))
    p.add_argument("--max-size", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--p", type=int, default=0, help="cohomological degree for the CSV range columns")
    p.add_argument("--budget", type=int, help="max n^(p+q) for the tensor oracle")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"borel-range: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, BudgetExceeded) as exc:
        print(f"borel-range: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
