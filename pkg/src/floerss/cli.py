"""Command-line interface.

Exit codes: 0 success or reproduced, 1 mismatch or an infeasible answer,
2 usage or parse error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Callable, Sequence

from . import catalog
from .complex import (
    FloerComplex,
    complex_to_json,
    hf_dims,
    load_complex,
    morse_homology,
    validate,
)
from .deduce import DEFAULT_BOUND, DEFAULT_BUDGET, Constraints, divisibility_set, forced_betti, gysin_solve
from .errors import BoundTooSmall, FloerSSError, ParseError, SearchBudgetExceeded
from .euler import verify_inequalities
from .generate import random_complex
from .specseq import band_window, laurent_for_pages, pages_up_to, theorem_checks

__all__ = ["main", "build_parser", "verify_suite"]

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _emit(obj: Any) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise _UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _int_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError as exc:
        raise _UsageError(f"expected a range like 2..12, got {text!r}") from exc


def _pairs(items: Sequence[str] | None) -> dict[str, int]:
    out: dict[str, int] = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise _UsageError(f"expected key=value, got {item!r}")
        try:
            out[key.strip()] = int(val)
        except ValueError as exc:
            raise _UsageError(f"value of {key!r} is not an integer") from exc
    return out


def _index_pairs(items: Sequence[str] | None) -> dict[int, int]:
    out = {}
    for key, val in _pairs(items).items():
        try:
            out[int(key)] = val
        except ValueError as exc:
            raise _UsageError(f"degree {key!r} is not an integer") from exc
    return out


def _constraints(args) -> Constraints:
    return Constraints(
        fix=_index_pairs(args.fix),
        at_least=_index_pairs(args.at_least),
        pd=args.pd,
        bound=args.bound,
    )


def _load_valid(path: str) -> FloerComplex:
    c = load_complex(path)
    bad = validate(c)
    if bad:
        raise ParseError(f"{path}: not a complex ({bad[0]})")
    return c


# -- pages -------------------------------------------------------------------


def render_grid(pg) -> str:
    """Rows ``q`` from top to bottom, columns ``p`` left to right; ``.`` marks cells outside the window."""
    lines = [f"E_{pg.r}"]
    if not pg.window:
        return lines[0] + "\n(empty window)"
    ps = sorted({p for p, _ in pg.window})
    qs = sorted({q for _, q in pg.window}, reverse=True)
    width = max(3, max(len(str(v)) for v in pg.cells.values()) + 1, max(len(str(p)) for p in ps) + 1)
    qw = max(len(str(q)) for q in qs)
    lines.append(" " * (qw + 3) + "".join(str(p).rjust(width) for p in ps))
    for q in qs:
        row = []
        for p in ps:
            row.append(str(pg.cells[(p, q)]) if (p, q) in pg.cells else ".")
        lines.append(f"q={str(q).rjust(qw)} " + "".join(x.rjust(width) for x in row))
    return "\n".join(lines)


def cmd_pages(args) -> int:
    c = _load_valid(args.file)
    r_top = c.nu + 1 if args.r_max is None else min(args.r_max, c.nu + 1)
    p_range = _int_range(args.p_range) if args.p_range else range(-1, 2)
    window = band_window(c.n, c.N, (p_range.start, p_range.stop - 1))
    lc = laurent_for_pages(c, window, r_top)
    pages = pages_up_to(lc, r_top, window)
    if args.json:
        _emit([{"r": pg.r, "cells": [list(x) for x in pg.cell_list()]} for pg in pages])
    else:
        sys.stdout.write("\n\n".join(render_grid(pg) for pg in pages) + "\n")
    return EXIT_OK


def cmd_homology(args) -> int:
    c = _load_valid(args.file)
    hf = hf_dims(c)
    out = {"n": c.n, "N": c.N, "nu": c.nu, "morse_betti": list(morse_homology(c)), "hf": list(hf)}
    if args.json:
        _emit(out)
    else:
        sys.stdout.write(f"H^*(C, ∂_0): {out['morse_betti']}\nHF^(l mod {c.N}): {out['hf']}\n")
    return EXIT_OK


# -- property driver ---------------------------------------------------------


def verify_suite(seed: int, trials: int, max_n: int = 6, max_dim: int = 4) -> dict[str, Any]:
    rng = random.Random(seed)
    counts: dict[str, list[int]] = {}
    first: dict[str, Any] | None = None
    for _ in range(trials):
        n = rng.randint(0, max_n)
        N = rng.randint(2, n + 2)
        c = random_complex(rng, n, N, max_dim=max_dim)
        for prop, ok in theorem_checks(c).items():
            slot = counts.setdefault(prop, [0, 0])
            slot[0 if ok else 1] += 1
            if not ok and first is None:
                first = {"property": prop, "complex": complex_to_json(c)}
    report = {
        "seed": seed,
        "trials": trials,
        "properties": {k: {"pass": v[0], "fail": v[1]} for k, v in sorted(counts.items())},
        "passed": all(v[1] == 0 for v in counts.values()),
    }
    if first is not None:
        report["counterexample"] = first
    return report


def cmd_verify(args) -> int:
    if args.complex:
        c = load_complex(args.complex)
        res = theorem_checks(c)
        report = {
            "complex": args.complex,
            "properties": {k: {"pass": int(v), "fail": int(not v)} for k, v in sorted(res.items())},
            "passed": all(res.values()),
        }
        if not res["valid"]:
            report["violations"] = [str(v) for v in validate(c)]
    else:
        report = verify_suite(args.seed, args.trials, args.max_n, args.max_dim)
    _emit(report)
    return EXIT_OK if report["passed"] else EXIT_MISMATCH


# -- deduction ---------------------------------------------------------------


def cmd_betti_search(args) -> int:
    cons = _constraints(args)
    res = forced_betti(args.dim, args.maslov, cons, strict=not args.allow_incomplete, budget=args.budget)
    _emit(
        {
            "dim": args.dim,
            "maslov": args.maslov,
            "constraints": {
                "fix": {str(k): v for k, v in cons.fix.items()},
                "at_least": {str(k): v for k, v in cons.at_least.items()},
                "pd": cons.pd,
                "bound": cons.bound,
            },
            "label": res.label,
            "complete": res.complete,
            "solutions": [list(v) for v in res.vectors],
        }
    )
    return EXIT_OK if res.vectors else EXIT_MISMATCH


def cmd_gysin(args) -> int:
    total = _int_list(args.total)
    cons = _constraints(args)
    sols = gysin_solve(total, args.base_dim, w_zero=args.w_zero, constraints=cons, cup_iso=_int_list(args.cup_iso or ""))
    _emit(
        {
            "total": total,
            "base_dim": args.base_dim,
            "w_zero": args.w_zero,
            "solutions": [
                {"beta": list(s.beta), "cup_ranks": list(s.cup), "pullback": list(s.pullback), "pushforward": list(s.pushforward)}
                for s in sols
            ],
        }
    )
    return EXIT_OK if sols else EXIT_MISMATCH


def cmd_divisibility(args) -> int:
    support = _int_list(args.support)
    Ns = list(_int_range(args.maslov_range))
    feasible = divisibility_set(support, args.dim, Ns, budget=args.budget)
    _emit({"support": support, "dim": args.dim, "maslov_range": [Ns[0], Ns[-1]] if Ns else [], "feasible": feasible})
    return EXIT_OK if feasible else EXIT_MISMATCH


def cmd_euler(args) -> int:
    c = _load_valid(args.complex)
    report = verify_inequalities(c, args.s, args.t)
    _emit(report.to_json())
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_scenario(args) -> int:
    if args.action == "list":
        _emit([{"name": s.name, "summary": s.summary, "params": dict(s.defaults)} for s in catalog.scenarios()])
        return EXIT_OK
    if not args.name:
        raise _UsageError("scenario run needs a name")
    rep = catalog.run(args.name, _pairs(args.params))
    _emit(rep.to_json())
    return EXIT_OK if rep.reproduced else EXIT_MISMATCH


def cmd_random(args) -> int:
    if args.N < 2:
        raise _UsageError("N must be at least 2")
    rng = random.Random(args.seed)
    c = random_complex(rng, args.n, args.N, max_dim=args.max_dim, higher=not args.no_higher)
    _emit(complex_to_json(c))
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def _add_constraint_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--fix", action="append", metavar="I=V", help="pin β_I to V")
    sp.add_argument("--at-least", action="append", metavar="I=V", help="require β_I >= V")
    sp.add_argument("--pd", action="store_true", help="require β_i = β_{k-i}")
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="entry bound")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="floerss", description="Floer-complex spectral sequences over GF(2)")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("pages", help="print spectral-sequence pages")
    sp.add_argument("file")
    sp.add_argument("--r-max", type=int)
    sp.add_argument("--p-range", help="filtration columns, e.g. -1..1")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_pages)

    sp = sub.add_parser("homology", help="Morse cohomology and Floer homology")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("verify-ss", help="run the spectral-sequence property suite")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--max-dim", type=int, default=4)
    sp.add_argument("--complex", help="check a single complex file instead")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("betti-search", help="Betti vectors allowing vanishing homology")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--maslov", type=int, required=True)
    _add_constraint_flags(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--allow-incomplete", action="store_true", help="report families that grow with the bound")
    sp.set_defaults(func=cmd_betti_search)

    sp = sub.add_parser("gysin", help="base Betti vectors from the Gysin sequence")
    sp.add_argument("--total", required=True, help="Betti vector of the total space, e.g. 1,1,0,1,1")
    sp.add_argument("--base-dim", type=int, required=True)
    sp.add_argument("--w-zero", action="store_true")
    sp.add_argument("--cup-iso", help="degrees where cup with w must be an isomorphism")
    _add_constraint_flags(sp)
    sp.set_defaults(func=cmd_gysin)

    sp = sub.add_parser("divisibility", help="periods admitting vanishing homology for a support")
    sp.add_argument("--support", required=True)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--maslov-range", default="2..12")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_divisibility)

    sp = sub.add_parser("euler", help="Euler-characteristic inequalities")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.set_defaults(func=cmd_euler)

    sp = sub.add_parser("scenario", help="list or run catalog scenarios")
    sp.add_argument("action", choices=["list", "run"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--params", nargs="*", metavar="K=V")
    sp.set_defaults(func=cmd_scenario)

    sp = sub.add_parser("random", help="emit a seeded random complex")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--max-dim", type=int, default=4)
    sp.add_argument("--no-higher", action="store_true")
    sp.set_defaults(func=cmd_random)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler: Callable[[Any], int] = args.func
    try:
        return handler(args)
    except BoundTooSmall as exc:
        sys.stderr.write(f"error: {exc} (raise --bound)\n")
        return EXIT_BUDGET
    except SearchBudgetExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except (_UsageError, FloerSSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
