"""Command line front end.

    qstirling poly --multiset "1^2 2^2" --family quasi
    qstirling gamma --multiset "1^2 2^2" --family stirling --format csv
    qstirling enumerate --multiset "1^2 2^2" --kind quasi
    qstirling orbit --multiset "1^2 2"
    qstirling verify all

Exit status: 0 on success, 1 when a verification check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .fs_action import orbit_polynomial, orbits
from .gamma import FAMILIES, GammaExpansionError, compute_polynomial, family_trees, family_words, gamma_from_trees, gamma_table
from .trees import to_json_obj, to_text, tree_stats
from .verify import DEFAULT_CEILING, SUITES, parse_multiset, run_verify
from .words import enumerate_words, format_word

KINDS = ("all", "quasi", "stirling", "trees", "itrees")


def _ceiling(args) -> int:
    if args.max_K is not None:
        return args.max_K
    return int(os.environ.get("QSTIRLING_MAX_K", DEFAULT_CEILING))


def cmd_poly(args) -> tuple[str, int]:
    m = args.multiset
    p = compute_polynomial(m, args.family)
    if args.format == "json":
        terms = [{"x": a, "y": b, "z": c, "coeff": k} for (a, b, c), k in p.sorted_terms()]
        return json.dumps({"multiset": list(m.multiplicities), "family": args.family, "terms": terms}), 0
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "y", "z", "coeff"])
        w.writerows((*exp, k) for exp, k in p.sorted_terms())
        return buf.getvalue().rstrip("\n"), 0
    return str(p), 0


def cmd_gamma(args) -> tuple[str, int]:
    m = args.multiset
    if args.source == "trees":
        if args.family not in ("trees", "itrees"):
            raise ValueError("--source trees needs --family trees or itrees")
        table = gamma_from_trees(m, args.family)
    else:
        try:
            table = gamma_table(m, args.family)
        except GammaExpansionError as exc:
            return f"not partial gamma-positive: {exc}", 1
    if args.format == "json":
        return table.to_json(), 0
    if args.format == "csv":
        return table.to_csv().rstrip("\n"), 0
    return table.to_text(), 0


def cmd_enumerate(args) -> tuple[str, int]:
    m = args.multiset
    if args.kind in ("trees", "itrees"):
        trees = list(family_trees(m, args.kind))
        if args.format == "json":
            return json.dumps([to_json_obj(t) for t in trees]), 0
        return "\n".join(to_text(t) for t in trees), 0
    words = list(enumerate_words(m) if args.kind == "all" else family_words(m, args.kind))
    if args.format == "json":
        return json.dumps([list(w) for w in words]), 0
    return "\n".join(format_word(w) for w in words), 0


def cmd_orbit(args) -> tuple[str, int]:
    records = []
    for o in orbits(family_trees(args.multiset, args.family)):
        rep = tree_stats(o.representative)
        records.append({
            "size": len(o),
            "representative": to_text(o.representative),
            "cdes": rep.cdes,
            "eleaf": rep.eleaf,
            "polynomial": str(orbit_polynomial(o)),
        })
    if args.format == "json":
        return json.dumps(records), 0
    return "\n".join("\t".join(str(r[k]) for k in r) for r in records), 0


def cmd_verify(args) -> tuple[str, int]:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    ceiling = _ceiling(args)
    reports = [run_verify(s, args.range, ceiling=ceiling, jobs=args.jobs) for s in suites]
    status = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        return "\n".join(r.to_json() for r in reports), status
    return "\n".join(r.to_text() for r in reports), status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qstirling", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json", "csv")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")

    def with_multiset(p):
        p.add_argument("--multiset", "-m", required=True, type=parse_multiset,
                       help='e.g. "1^2 2^2 3" or multiplicities "2,2,1"')

    p = sub.add_parser("poly", help="trivariate statistic polynomial")
    with_multiset(p)
    p.add_argument("--family", choices=FAMILIES, default="quasi")
    common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("gamma", help="partial gamma table")
    with_multiset(p)
    p.add_argument("--family", choices=FAMILIES, default="quasi")
    p.add_argument("--source", choices=("poly", "trees"), default="poly",
                   help="expand the polynomial, or count trees without double descents")
    common(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("enumerate", help="list words or trees")
    with_multiset(p)
    p.add_argument("--kind", choices=KINDS, default="quasi")
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("orbit", help="orbits of the tree FS-action")
    with_multiset(p)
    p.add_argument("--family", choices=("trees", "itrees"), default="trees")
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("range", nargs="?", help='"K<=7", "n<=3" or a single multiset; default per suite')
    p.add_argument("--max-K", dest="max_K", type=int, help="ceiling on K (env QSTIRLING_MAX_K, default 9)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
