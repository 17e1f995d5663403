"""Command-line interface.

Exit status: 0 on success, 1 when a verification check fails, 2 for usage or
validation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .errors import LensIndexError
from .esh import filtered_ranks, graded_ranks, min_degree
from .index import bott_function, twist_ga, twist_ga_eps
from .invariants import class_invariants
from .lens import LensSpace, chern_order, classes, homotopy_class, normalize_weights
from .plot import bott_rows, bott_svg, rows_to_csv
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


INV_COLUMNS = ["j", "homotopy_weights", "w_plus", "w_minus", "k_a", "h_a", "h_tilde_a",
               "positive", "strictly_positive", "N"]


def _cell(v: object) -> str:
    if v is None:
        return "-"
    if isinstance(v, list):
        return "(" + ",".join(map(str, v)) + ")"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def cmd_invariants(args: argparse.Namespace) -> int:
    lens = normalize_weights(args.p, args.weights)
    chosen = [homotopy_class(lens, args.cls)] if args.cls is not None else classes(lens)
    rows = [class_invariants(lens, a).as_dict() for a in chosen]
    if args.format == "json":
        if args.cls is not None:
            payload = rows[0]
        else:
            payload = {"lens": str(lens), "p": lens.p, "weights": list(lens.weights),
                       "N": chern_order(lens), "classes": rows,
                       "positive_classes": [r["j"] for r in rows if r["positive"]]}
        _out(json.dumps(payload))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(INV_COLUMNS)
        for r in rows:
            w.writerow([" ".join(map(str, r[c])) if isinstance(r[c], list) else
                        ("" if r[c] is None else str(r[c]).lower() if isinstance(r[c], bool)
                         else r[c]) for c in INV_COLUMNS])
        _out(buf.getvalue())
    else:
        table = [INV_COLUMNS] + [[_cell(r[c]) for c in INV_COLUMNS] for r in rows]
        widths = [max(len(row[i]) for row in table) for i in range(len(INV_COLUMNS))]
        lines = [f"{lens}  N={chern_order(lens)}"]
        lines += ["  ".join(cell.rjust(wd) for cell, wd in zip(row, widths)) for row in table]
        pos = [r["j"] for r in rows if r["positive"]]
        if args.cls is None:
            lines.append("positive classes: " + (", ".join(map(str, pos)) if pos else "none"))
        _out("\n".join(lines))
    return EXIT_OK


def cmd_bott(args: argparse.Namespace) -> int:
    lens = normalize_weights(args.p, args.weights)
    a = homotopy_class(lens, args.cls)
    path = twist_ga(lens, a) if args.eps is None else twist_ga_eps(lens, a, args.eps)
    b = bott_function(path)
    N = chern_order(lens)
    if args.format == "svg":
        label = "B_Ga/N" if args.eps is None else f"B_Ga^eps/N, eps={args.eps}"
        _out(bott_svg(b, N, f"{label} on {lens}, j={a.j}"))
    else:
        _out(rows_to_csv(bott_rows(b, N)))
    return EXIT_OK


def cmd_esh(args: argparse.Namespace) -> int:
    if args.action is not None:
        ranks = filtered_ranks(args.n, args.p, args.scale, args.action, j=args.cls,
                               k_max=args.kmax)
    else:
        ranks = graded_ranks(args.n, args.p, args.cls, args.kmax)
    lens = LensSpace(args.p, (1,) * (args.n + 1))
    ka = class_invariants(lens, homotopy_class(lens, args.cls)).k_a
    payload = ranks.to_json()
    lowest = min_degree(ranks) if ranks.entries else None
    payload["min_degree"] = None if lowest is None else str(lowest)
    payload["k_a"] = str(ka)
    payload["k_a_match"] = None if lowest is None else lowest == ka
    if args.format == "json":
        _out(json.dumps(payload))
    else:
        lines = [f"n={args.n} p={args.p} class={args.cls}"]
        lines += [f"  degree {r['degree']:>8}  rank {r['rank']}" for r in payload["ranks"]]
        lines.append(f"min_degree={payload['min_degree']} k_a={payload['k_a']} "
                     f"match={payload['k_a_match']}")
        _out("\n".join(lines))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    checks = run_suite(args.suite)
    for c in checks:
        if args.json:
            _out(json.dumps(c.to_json()))
        else:
            _out(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  ({c.detail})")
    failed = [c for c in checks if not c.passed]
    if failed:
        sys.stderr.write(f"first failing identity: {failed[0].name}: {failed[0].detail}\n")
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lensindex",
                                 description="Exact index invariants of lens spaces.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="per-class k_a, h_a, h~_a, positivity")
    p.add_argument("p", type=int)
    p.add_argument("weights", type=int, nargs="+")
    p.add_argument("--class", dest="cls", type=int)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("bott", help="Bott function of the twist path, divided by N")
    p.add_argument("p", type=int)
    p.add_argument("weights", type=int, nargs="+")
    p.add_argument("--class", dest="cls", type=int, required=True)
    p.add_argument("--eps", type=_fraction)
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.set_defaults(func=cmd_bott)

    p = sub.add_parser("esh", help="equivariant homology ranks on L_p(1,...,1)")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--class", dest="cls", type=int, default=1)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--action", type=_fraction, help="action bound, as a multiple of pi")
    p.add_argument("--scale", type=_fraction, default=Fraction(1))
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_esh)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--json", action="store_true", help="one JSON object per check")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LensIndexError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
