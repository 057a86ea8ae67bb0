"""Command-line interface.

Exit codes: 0 success, 2 bound violation or verification failure,
3 parse/config error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import construct, exact, harness
from .generate import generate as build_generated, parse_gen_spec
from .errors import BoundMiss, ForestBoundError, ParseError
from .graph import (
    ForestClass,
    Graph,
    STAR_FOREST,
    format_edge_list,
    parse_edge_list,
)
from .partition import Partition, format_partition, parse_partition_file
from .weights import BoundSpec, epsilon_star, parse_bound_spec, star_epsilon_opt, total_weight

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_CONFIG = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_CONFIG)


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _rat_approx(x: Fraction) -> str:
    return f"{_rat(x)} (~{float(x):.6f})"


def _read_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text())


def _read_partition(path: Optional[str], mode: str) -> Optional[Partition]:
    if path is None:
        return None
    return parse_partition_file(Path(path).read_text(), mode)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="forestbound", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="evaluate a degree-sequence bound")
    p_bound.add_argument("graph", help="edge-list file")
    p_bound.add_argument("spec", help="bound spec, e.g. flin, fkeps:k=2,eps=1/6, hkg:k=3, star")
    p_bound.add_argument("--partition", help="partition file for abc/abstar specs")

    p_cons = sub.add_parser("construct", help="build and verify a certificate")
    p_cons.add_argument("graph")
    p_cons.add_argument(
        "kind", choices=["linear", "caterpillar", "star", "abc", "ab"],
        help="certificate family",
    )
    p_cons.add_argument("--k", type=int, help="degree bound for caterpillar forests")
    p_cons.add_argument("--partition", help="partition file (required for abc/ab)")
    p_cons.add_argument("--out", help="certificate output file (default stdout)")
    p_cons.add_argument("--threshold", type=int, default=construct.DEFAULT_EXACT_THRESHOLD)
    p_cons.add_argument("--budget", type=int, default=exact.DEFAULT_BUDGET)

    p_verify = sub.add_parser("verify", help="re-check a certificate")
    p_verify.add_argument("graph")
    p_verify.add_argument("certificate")
    p_verify.add_argument("--partition")
    p_verify.add_argument(
        "--mode", choices=["ABC", "AB"], default="ABC", help="partition mode when given"
    )

    p_exact = sub.add_parser("exact", help="exact optimum by branch and bound")
    p_exact.add_argument("graph")
    p_exact.add_argument("kind", choices=["linear", "caterpillar", "star", "abc", "ab"])
    p_exact.add_argument("--k", type=int)
    p_exact.add_argument("--partition")
    p_exact.add_argument("--budget", type=int, default=exact.DEFAULT_BUDGET)

    p_gen = sub.add_parser("gen", help="generate a witness-family or random graph")
    p_gen.add_argument("spec", help="e.g. hnk:n=3,k=2 or gnp:n=30,p=0.2,seed=42")
    p_gen.add_argument("--out", help="edge-list output file (default stdout)")
    p_gen.add_argument("--partition-out", help="write the gadget labeling here")

    p_eps = sub.add_parser("epsilon-opt", help="optimal epsilon for a graph's degrees")
    p_eps.add_argument("graph")
    group = p_eps.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, help="caterpillar family")
    group.add_argument("--star", action="store_true", help="star forest family")

    p_har = sub.add_parser("harness", help="run a verification battery")
    p_har.add_argument("suite", choices=list(harness.SUITES))
    p_har.add_argument("--seed", type=int, default=0)
    p_har.add_argument("--sizes", type=int, nargs="*")
    p_har.add_argument("--threads", type=int)
    p_har.add_argument("--out", help="report file (default stdout)")

    return parser


def cmd_bound(args) -> int:
    g = _read_graph(args.graph)
    spec = parse_bound_spec(args.spec)
    labels = None
    if spec.variant in ("abc", "abstar"):
        mode = "ABC" if spec.variant == "abc" else "AB"
        labels = _read_partition(args.partition, mode)
        if labels is None:
            raise ParseError(f"{spec.variant} bound needs --partition")
    if spec.variant == "fkeps" and spec.eps is None:
        eps, d_star = epsilon_star(g.degree_histogram(), spec.k)
        print(f"eps={_rat(eps)}")
        print(f"d_star={d_star if d_star is not None else '-'}")
        spec = BoundSpec.fkeps(spec.k, eps)
    elif spec.variant == "star" and spec.eps is None:
        eps = star_epsilon_opt(g.degree_histogram())
        print(f"eps={_rat(eps)}")
        spec = BoundSpec.star(eps)
    print(f"bound={_rat_approx(total_weight(g, spec, labels))}")
    return EXIT_OK


def cmd_construct(args) -> int:
    g = _read_graph(args.graph)
    trace = None
    labels = None
    try:
        if args.kind == "linear":
            cert = construct.greedy_linear_forest(g)
        elif args.kind == "caterpillar":
            if args.k is None:
                cert = construct.caterpillar_forest(g)
            else:
                cert = construct.k_caterpillar_forest(g, args.k, args.threshold, args.budget)
        elif args.kind == "star":
            cert = construct.star_forest(g, args.threshold, args.budget)
        elif args.kind == "abc":
            labels = _read_partition(args.partition, "ABC")
            if labels is None:
                raise ParseError("abc construction needs --partition")
            cert, trace = construct.abc_construct(g, labels, args.threshold, args.budget)
        else:
            labels = _read_partition(args.partition, "AB")
            if labels is None:
                raise ParseError("ab construction needs --partition")
            cert, trace = construct.ab_construct(g, labels, args.threshold, args.budget)
    except BoundMiss as exc:
        print(f"verdict=bound-miss detail={exc}", file=sys.stderr)
        return EXIT_VIOLATION
    text = construct.certificate_to_text(cert, g.edge_hash(), trace)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    ok = construct.verify_certificate(g, cert, labels)
    print(f"verdict={'pass' if ok else 'fail'} size={cert.size()} bound={_rat(cert.claimed_bound)}")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    cert, graph_hash = construct.certificate_from_text(Path(args.certificate).read_text())
    labels = _read_partition(args.partition, args.mode)
    if graph_hash not in ("-", "") and graph_hash != g.edge_hash():
        print("verdict=fail reason=graph-hash-mismatch")
        return EXIT_VIOLATION
    ok = construct.verify_certificate(g, cert, labels)
    print(f"verdict={'pass' if ok else 'fail'} size={cert.size()} bound={_rat(cert.claimed_bound)}")
    return EXIT_OK if ok else EXIT_VIOLATION


def _forest_class(kind: str, k: Optional[int]) -> ForestClass:
    if kind == "linear":
        return ForestClass("linear")
    if kind == "star":
        return STAR_FOREST
    return ForestClass.caterpillar(k)


def cmd_exact(args) -> int:
    g = _read_graph(args.graph)
    if args.kind in ("abc", "ab"):
        mode = "ABC" if args.kind == "abc" else "AB"
        labels = _read_partition(args.partition, mode)
        if labels is None:
            raise ParseError(f"{args.kind} exact search needs --partition")
        res = exact.alpha_exact_partitioned(g, labels, args.budget)
    else:
        res = exact.alpha_exact(g, _forest_class(args.kind, args.k), args.budget)
    print(f"alpha={res.alpha}")
    print(f"witness={' '.join(map(str, sorted(res.witness)))}")
    print(f"nodes={res.nodes_explored}")
    print(f"exact={'yes' if res.exact else 'no'}")
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = parse_gen_spec(args.spec)
    g, labels = build_generated(spec)
    text = format_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.partition_out:
        if labels is None:
            raise ParseError(f"family {spec.family!r} has no labeling to write")
        Path(args.partition_out).write_text(format_partition(labels))
    return EXIT_OK


def cmd_epsilon_opt(args) -> int:
    g = _read_graph(args.graph)
    hist = g.degree_histogram()
    if args.star:
        eps = star_epsilon_opt(hist)
        print(f"eps={_rat(eps)}")
        print(f"bound={_rat_approx(total_weight(g, BoundSpec.star(eps)))}")
    else:
        eps, d_star = epsilon_star(hist, args.k)
        print(f"eps={_rat(eps)}")
        print(f"d_star={d_star if d_star is not None else '-'}")
        print(f"bound={_rat_approx(total_weight(g, BoundSpec.fkeps(args.k, eps)))}")
    return EXIT_OK


def cmd_harness(args) -> int:
    report = harness.run_suite(args.suite, args.seed, args.sizes, args.threads)
    text = report.to_text()
    if args.out:
        Path(args.out).write_text(text)
        print(f"records={len(report.records)} failures={report.failures}")
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.failures == 0 else EXIT_VIOLATION


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "bound": cmd_bound,
        "construct": cmd_construct,
        "verify": cmd_verify,
        "exact": cmd_exact,
        "gen": cmd_gen,
        "epsilon-opt": cmd_epsilon_opt,
        "harness": cmd_harness,
    }[args.command]
    try:
        return handler(args)
    except BoundMiss as exc:
        print(f"error: bound miss: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ForestBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
