"""Command-line front end.

Commands: chrom, theta-chrom, dp-exact, dp-formula, compare, verify, scan,
threshold.  Exit code 0 means success, 1 means a verification check
failed, 2 means a usage or input error.  All counts in JSON output are
decimal strings so consumers never face integer-width questions.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import (
    classify_generalized,
    fvs1_dp_polynomial,
    list_color_threshold,
    theta_dp_formula,
)
from .chromatic import chromatic_polynomial, theta_chromatic
from .covers import cover_to_json, min_over_covers
from .errors import DpchromaError, SearchBudgetExceeded
from .graphs import Graph, ThetaSpec, build_generalized_theta
from .poly import IntPoly, poly_to_json
from .verify import SUITES, run_suites

USAGE_ERROR = 2
CHECK_FAILED = 1


def load_graph(source: str) -> Graph:
    """A graph source is either `theta:l1,l2,...` or a graph file path."""
    if source.startswith("theta:"):
        return build_generalized_theta(ThetaSpec.parse(source))
    try:
        with open(source, "r", encoding="utf-8") as handle:
            return Graph.from_text(handle.read())
    except OSError as exc:
        raise DpchromaError(f"cannot read graph file {source!r}: {exc}") from exc
    except ValueError as exc:
        raise DpchromaError(f"malformed graph file {source!r}: {exc}") from exc


def parse_m_range(text: str) -> tuple[int, int]:
    """Either a single fold `m` or an inclusive range `a..b`."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        low, high = int(lo), int(hi)
    else:
        low = high = int(text)
    if low < 1 or high < low:
        raise DpchromaError(f"bad fold range {text!r}")
    return low, high


def effective_workers(flag: int | None) -> int:
    env = os.environ.get("DPCHROMA_WORKERS")
    if env:
        return max(1, int(env))
    return flag if flag else 1


def emit(payload: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _poly_payload(p: IntPoly) -> dict:
    return poly_to_json(p)


def cmd_chrom(args) -> int:
    g = load_graph(args.source)
    poly = chromatic_polynomial(g, limit=max(args.limit, 0))
    payload = {"command": "chrom", "source": args.source, "polynomial": _poly_payload(poly)}
    lines = [f"P({args.source}, m) = {poly}"]
    if args.m is not None:
        payload["m"] = args.m
        payload["value"] = str(poly(args.m))
        lines.append(f"P({args.source}, {args.m}) = {poly(args.m)}")
    emit(payload, args.format, lines)
    return 0


def cmd_theta_chrom(args) -> int:
    spec = ThetaSpec.parse(args.spec)
    poly = theta_chromatic(spec)
    payload = {
        "command": "theta-chrom",
        "spec": str(spec),
        "polynomial": _poly_payload(poly),
    }
    lines = [f"P({spec}, m) = {poly}"]
    if args.m is not None:
        payload["m"] = args.m
        payload["value"] = str(poly(args.m))
        lines.append(f"P({spec}, {args.m}) = {poly(args.m)}")
    emit(payload, args.format, lines)
    return 0


def cmd_dp_exact(args) -> int:
    g = load_graph(args.source)
    result = min_over_covers(
        g,
        args.m,
        symmetry=args.symmetry,
        budget=args.budget,
        workers=effective_workers(args.workers),
    )
    payload = {
        "command": "dp-exact",
        "source": args.source,
        "m": args.m,
        "symmetry": args.symmetry,
        "candidates": result.candidates,
        "minimum": str(result.value),
        "witness": cover_to_json(result.cover),
    }
    lines = [
        f"P_DP({args.source}, {args.m}) = {result.value}"
        f"  [{result.candidates} covers examined]",
        json.dumps(cover_to_json(result.cover)),
    ]
    emit(payload, args.format, lines)
    return 0


def _dp_value(source: str, g: Graph, m: int):
    """Formula-route DP value: parity-case closed form or the
    feedback-vertex polynomial (exact for m past its stabilization bound)."""
    spec = g.theta
    if spec is not None and spec.k == 3 and min(spec.lengths) >= 2:
        formula = theta_dp_formula(*sorted(spec.lengths))
        return formula.value_at(m), f"parity-case-{formula.case}"
    result = fvs1_dp_polynomial(g)
    note = "fvs1" if m >= result.stable_from else "fvs1(below-stabilization)"
    return result.dp_polynomial(m), note


def cmd_dp_formula(args) -> int:
    g = load_graph(args.source)
    spec = g.theta
    if spec is not None and spec.k == 3 and min(spec.lengths) >= 2:
        formula = theta_dp_formula(*sorted(spec.lengths))
        payload = {
            "command": "dp-formula",
            "source": args.source,
            "route": "theta-parity",
            "case": formula.case,
            "valid_from": formula.valid_from,
            "polynomial": _poly_payload(formula.polynomial),
        }
        lines = [
            f"case {formula.case} (valid for m >= {formula.valid_from}):",
            f"P_DP({args.source}, m) = {formula.polynomial}",
        ]
        if args.m is not None:
            payload["m"] = args.m
            payload["value"] = str(formula.value_at(args.m))
            lines.append(f"P_DP({args.source}, {args.m}) = {formula.value_at(args.m)}")
    else:
        result = fvs1_dp_polynomial(g)
        payload = {
            "command": "dp-formula",
            "source": args.source,
            "route": "feedback-vertex-one",
            "stable_from": result.stable_from,
            "center": result.decomposition.center,
            "partition": [sorted(part) for part in result.partition.parts],
            "maximizers": len(result.maximizers),
            "weight": _poly_payload(result.weight),
            "polynomial": _poly_payload(result.dp_polynomial),
        }
        lines = [
            f"feedback vertex {result.decomposition.center!r};"
            f" winning partition {[sorted(p) for p in result.partition.parts]}",
            f"P_DP({args.source}, m) = {result.dp_polynomial}   (m >= {result.stable_from})",
        ]
        if args.m is not None:
            payload["m"] = args.m
            payload["value"] = str(result.dp_polynomial(args.m))
            lines.append(
                f"P_DP({args.source}, {args.m}) = {result.dp_polynomial(args.m)}"
            )
    emit(payload, args.format, lines)
    return 0


def cmd_compare(args) -> int:
    g = load_graph(args.source)
    low, high = parse_m_range(args.m)
    spec = g.theta
    chrom = (
        theta_chromatic(spec)
        if spec is not None
        else chromatic_polynomial(g, limit=max(16, g.n))
    )
    rows = []
    for m in range(low, high + 1):
        p = chrom(m)
        if args.exact:
            dp, route = min_over_covers(g, m, budget=args.budget).value, "search"
        else:
            dp, route = _dp_value(args.source, g, m)
        rows.append(
            {
                "m": m,
                "P": str(p),
                "P_DP": str(dp),
                "equal": p == dp,
                "gap": str(p - dp),
                "route": route,
            }
        )
    if args.format == "json":
        print(json.dumps({"command": "compare", "source": args.source, "rows": rows}, indent=2))
    elif args.format == "text":
        for r in rows:
            print(
                f"m={r['m']}  P={r['P']}  P_DP={r['P_DP']}  gap={r['gap']}  [{r['route']}]"
            )
    else:
        print("m,P,P_DP,equal,gap,route")
        for r in rows:
            print(
                f"{r['m']},{r['P']},{r['P_DP']},{str(r['equal']).lower()},{r['gap']},{r['route']}"
            )
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    checks = run_suites(names, seed=args.seed)
    failed = [c for c in checks if not c.passed]
    if args.format == "json":
        payload = {
            "command": "verify",
            "suites": names,
            "seed": args.seed,
            "total": len(checks),
            "failed": len(failed),
            "checks": [c.to_dict() for c in checks],
        }
        print(json.dumps(payload, indent=2))
    else:
        for c in checks:
            status = "pass" if c.passed else "FAIL"
            print(f"[{status}] {c.name}: {c.instance}")
            if not c.passed:
                print(f"        rule:     {c.rule}")
                print(f"        expected: {c.expected}")
                print(f"        actual:   {c.actual}")
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return CHECK_FAILED if failed else 0


def cmd_scan(args) -> int:
    spec = ThetaSpec.parse(args.spec)
    result = classify_generalized(spec, max_m=args.max_m)
    payload = {
        "command": "scan",
        "spec": str(spec),
        "kind": result.kind,
        "witness_path": result.witness_path,
        "empirical_bound": result.empirical_bound,
        "searched_to": result.searched_to,
    }
    if result.kind == "eventually-equal":
        lines = [f"{spec}: eventually-equal (parities of path 1 and paths 2..k all differ)"]
    elif result.empirical_bound is not None:
        lines = [
            f"{spec}: eventually-less via path {result.witness_path};"
            f" deficit certified from m = {result.empirical_bound}"
        ]
    else:
        lines = [
            f"{spec}: eventually-less via path {result.witness_path};"
            f" no certificate up to m = {result.searched_to}"
        ]
    emit(payload, args.format, lines)
    return 0


def cmd_threshold(args) -> int:
    threshold, least = list_color_threshold(args.edges)
    payload = {
        "command": "threshold",
        "edges": args.edges,
        "threshold": f"{threshold:.12g}",
        "least_integer_above": least,
    }
    emit(
        payload,
        args.format,
        [f"edges={args.edges}: threshold {threshold:.12g}, least integer above {least}"],
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpchroma",
        description="Exact DP color functions and chromatic polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default="text", choices=("text", "json")):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("chrom", help="chromatic polynomial of a graph")
    p.add_argument("source", help="theta:l1,l2,... or a graph file")
    p.add_argument("--m", type=int, default=None, help="also evaluate at this fold")
    p.add_argument("--limit", type=int, default=16, help="vertex-count limit")
    add_format(p)
    p.set_defaults(func=cmd_chrom)

    p = sub.add_parser("theta-chrom", help="closed-form Theta chromatic polynomial")
    p.add_argument("spec", help="theta:l1,l2,...")
    p.add_argument("--m", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_theta_chrom)

    p = sub.add_parser("dp-exact", help="exhaustive DP color function value")
    p.add_argument("source")
    p.add_argument("--m", type=int, required=True)
    p.add_argument(
        "--symmetry",
        choices=("none", "tree-canonical", "tree-canonical+conjugacy"),
        default="tree-canonical+conjugacy",
    )
    p.add_argument("--budget", type=int, default=10_000_000)
    p.add_argument("--workers", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_dp_exact)

    p = sub.add_parser("dp-formula", help="DP color function by formula")
    p.add_argument("source")
    p.add_argument("--m", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_dp_formula)

    p = sub.add_parser(
        "compare",
        help="P versus P_DP over a fold range",
        description="The formula route needs a theta graph or a one-vertex "
        "feedback set; pass --exact for anything else.",
    )
    p.add_argument("source")
    p.add_argument("--m", required=True, help="fold or range a..b")
    p.add_argument("--exact", action="store_true", help="use exhaustive search")
    p.add_argument("--budget", type=int, default=10_000_000)
    add_format(p, default="csv", choices=("csv", "json", "text"))
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.add_argument("--seed", type=int, default=20200801)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="parity classification with certificate sweep")
    p.add_argument("spec")
    p.add_argument("--max-m", type=int, default=64)
    add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("threshold", help="list-color agreement threshold")
    p.add_argument("--edges", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_threshold)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SearchBudgetExceeded as exc:
        print(f"dpchroma: search budget exceeded: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except DpchromaError as exc:
        print(f"dpchroma: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"dpchroma: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
