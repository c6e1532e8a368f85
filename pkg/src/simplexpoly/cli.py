"""Command-line verification harness.

Subcommands:

    print-poly   evaluate and print one family member (or its monic mate)
    verify       run a verification sweep and write a JSON report
    gram         emit a weighted Gram matrix as CSV
    connect      print a connection expansion as JSON

Exit codes: 0 all checks pass; 1 failures or crash; 2 erratum candidates
(a relation failing on every applicable sample); 64 usage error; 65
malformed config.  Rational inputs are given as 'num/den' strings so exact
checks never see floats.  Output is deterministic: sorted keys, floats
printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import jacobi1d, quadrature, simplex3d, sweeps, triangle2d
from .operators import summarize

EX_OK = 0
EX_FAIL = 1
EX_ERRATUM = 2
EX_USAGE = 64
EX_CONFIG = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _fractions(text: str, count: int = None):
    vals = tuple(sweeps.parse_fraction(v) for v in text.split(","))
    if count is not None and len(vals) != count:
        raise ValueError(f"expected {count} comma-separated values, got {len(vals)}")
    return vals


def _ints(text: str):
    return tuple(int(v) for v in text.split(","))


def _fmt(v: float) -> str:
    return format(float(v), ".12g")


def build_parser() -> _Parser:
    parser = _Parser(prog="simplexpoly", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pp = sub.add_parser("print-poly", help="print one family member")
    pp.add_argument("--family", choices=("jacobi", "triangle", "simplex"), required=True)
    pp.add_argument("--index", required=True, help="e.g. 2 / 2,1 / 1,0,2")
    pp.add_argument("--params", required=True, help="comma-separated rationals")
    pp.add_argument("--monic", action="store_true", help="print the monic solution instead")

    pv = sub.add_parser("verify", help="run a verification sweep")
    pv.add_argument("--suite", choices=sweeps.SUITES, required=True)
    pv.add_argument("--config", default=None, help="sweep config JSON (default: shipped)")
    pv.add_argument("--out", default=None, help="write the JSON report here")
    pv.add_argument("--jobs", type=int, default=None,
                    help="worker processes (default: config value, env SIMPLEXPOLY_JOBS)")

    pg = sub.add_parser("gram", help="emit a Gram matrix as CSV")
    pg.add_argument("--family", choices=("triangle", "simplex"), default="simplex")
    pg.add_argument("--N", dest="max_degree", type=int, required=True)
    pg.add_argument("--params", required=True)
    pg.add_argument("--points", type=int, default=None, help="quadrature points per axis")
    pg.add_argument("--out", default=None, help="CSV path (default: stdout)")

    pc = sub.add_parser("connect", help="print a connection expansion")
    pc.add_argument("--mode", choices=("alpha", "general"), required=True)
    pc.add_argument("--index", required=True)
    pc.add_argument("--params", required=True, help="six source parameters")
    pc.add_argument("--xi", default=None, help="target first parameter (mode=alpha)")
    pc.add_argument("--target", default=None, help="four target parameters (mode=general)")
    pc.add_argument("--out", default=None)
    return parser


def cmd_print_poly(args) -> int:
    if args.family == "jacobi":
        if args.monic:
            raise ValueError("--monic applies to triangle and simplex families")
        (n,) = _ints(args.index)
        params = _fractions(args.params, 2)
        poly = jacobi1d.shifted_jacobi_raw(n, *params)
    elif args.family == "triangle":
        n, k = _ints(args.index)
        params = _fractions(args.params, 4)
        if args.monic:
            poly = triangle2d.monic_triangle((n, k), params)
        else:
            poly = triangle2d.triangle_poly_raw(n, k, *params)
    else:
        idx = _ints(args.index)
        if len(idx) != 3:
            raise ValueError("simplex index needs three entries")
        params = _fractions(args.params, 6)
        if args.monic:
            poly = simplex3d.monic_simplex(idx, params)
        else:
            poly = simplex3d.simplex_poly_raw(*idx, *params)
    print(poly.to_text())
    return EX_OK


def cmd_verify(args) -> int:
    path = args.config or sweeps.default_config_path()
    try:
        config = sweeps.load_config(path)
        jobs = args.jobs
        if jobs is None:
            jobs = int(os.environ.get("SIMPLEXPOLY_JOBS", config.get("jobs", 1)))
        reports = sweeps.run_suite(args.suite, config, jobs=jobs)
    except (KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EX_CONFIG
    summary = summarize(reports)
    if args.out:
        sweeps.write_report(args.out, reports, summary)
    for relation in sorted(summary["per_relation"]):
        counts = summary["per_relation"][relation]
        line = (
            f"{relation}: {counts['pass']} pass, {counts['fail']} fail, "
            f"{counts['not_applicable']} n/a"
        )
        if relation in summary["erratum_candidates"]:
            line += "  [ERRATUM-CANDIDATE]"
        print(line)
    totals = summary["totals"]
    print(
        f"suite {args.suite}: {totals['pass']} pass, {totals['fail']} fail, "
        f"{totals['not_applicable']} n/a"
    )
    if summary["erratum_candidates"]:
        print("erratum candidates:", ", ".join(summary["erratum_candidates"]))
        return EX_ERRATUM
    return EX_OK if totals["fail"] == 0 else EX_FAIL


def cmd_gram(args) -> int:
    if args.family == "simplex":
        params = _fractions(args.params, 6)
        idxs, gram = quadrature.gram_matrix(args.max_degree, params, points=args.points)
        labels = [f"{i},{j},{k}" for i, j, k in idxs]
    else:
        params = _fractions(args.params, 4)
        idxs, gram = quadrature.gram_matrix_triangle(
            args.max_degree, params, points=args.points
        )
        labels = [f"{n},{k}" for n, k in idxs]
    lines = ["index;" + ";".join(labels)]
    for label, row in zip(labels, np.asarray(gram)):
        lines.append(label + ";" + ";".join(_fmt(v) for v in row))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EX_OK


def cmd_connect(args) -> int:
    idx = _ints(args.index)
    params = _fractions(args.params, 6)
    if args.mode == "alpha":
        if args.xi is None:
            raise ValueError("--xi is required for mode=alpha")
        expansion = simplex3d.connect_alpha(idx, params, sweeps.parse_fraction(args.xi))
    else:
        if args.target is None:
            raise ValueError("--target is required for mode=general")
        expansion = simplex3d.connect_general(idx, params, _fractions(args.target, 4))
    ok = expansion.verify()
    payload = {
        "source_index": list(expansion.source_index),
        "source_params": [str(v) for v in expansion.source_params],
        "target_params": [str(v) for v in expansion.target_params],
        "terms": [
            {
                "index": list(t.index),
                "coeff": str(t.coeff),
                "pow_one_minus_x": t.pow_1x,
                "pow_one_minus_x_minus_y": t.pow_1xy,
            }
            for t in expansion.terms
        ],
        "reassembles_exactly": ok,
    }
    text = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EX_OK if ok else EX_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "print-poly": cmd_print_poly,
        "verify": cmd_verify,
        "gram": cmd_gram,
        "connect": cmd_connect,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"simplexpoly: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except FileNotFoundError as exc:
        print(f"simplexpoly: error: {exc}", file=sys.stderr)
        return EX_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
