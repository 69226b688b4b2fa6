"""Command-line entry point: ``digraph-subdiv <command> ...``.

Exit codes: 0 success, 1 certificate rejected by ``verify``, 2 unreadable
input, 3 precondition violated, 4 internal invariant violated, 5 best-effort
construction failed.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import generators
from .builder import build_subdivision, order_bound, short_bound, write_certificate
from .connectivity import kappa, max_disjoint_paths
from .digraph import read_digraph, write_digraph
from .errors import (GraphInputError, InvariantViolation, NotEnoughBranchVertices, ParseError,
                     PreconditionError, SubdivisionFailure)
from .extractor import DEFAULT_EXHAUSTIVE_CAP, extract_core, write_trace
from .params import describe_ratio
from .verifier import DEFAULT_SAMPLE, read_certificate, verify_certificate

THREADS_ENV = "DIGRAPH_SUBDIV_THREADS"

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INVARIANT = 4
EXIT_BEST_EFFORT = 5


def _echo_config(args: argparse.Namespace) -> None:
    items = sorted((k, v) for k, v in vars(args).items() if k not in ("func", "verbose"))
    print("config " + args.command + " " + " ".join(f"{k}={v}" for k, v in items if k != "command"))


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "complete":
        graph = generators.complete_digraph(_need(args.n, "--n"))
    elif fam == "bipartite-digraph":
        graph = generators.complete_bipartite_digraph(_need(args.m, "--m"))
    elif fam == "oriented-bipartite":
        graph = generators.oriented_bipartite(_need(args.m, "--m"))
    elif fam == "bottleneck":
        graph = generators.two_cliques_bottleneck(_need(args.a, "--a"))
    else:
        graph = generators.random_out_regular(_need(args.n, "--n"), _need(args.d, "--d"), args.seed)
    write_digraph(graph, args.output)
    print(f"wrote {args.output} n={graph.order} m={graph.size}")
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise PreconditionError(f"{flag} is required for this family")
    return value


def cmd_stats(args) -> int:
    graph = read_digraph(args.file)
    n, delta = graph.order, graph.min_out_degree()
    indeg = graph.in_degrees()
    print(f"n {n}")
    print(f"m {graph.size}")
    print(f"min_outdeg {delta}")
    print(f"min_indeg {graph.min_in_degree()}")
    print(f"order_bound {order_bound(n, delta) if n else 0}")
    if delta:
        print(f"short_bound {short_bound(n, delta)}  # 8n^2/d^2 = {describe_ratio(8 * n * n, delta * delta)}")
    else:
        print("short_bound 0  # undefined for d = 0")
    print(f"high_indegree_count {sum(1 for k in indeg if 2 * k >= delta)}")
    if n:
        print(f"kappa_threshold {describe_ratio(delta * delta, 4 * n)}")
    return EXIT_OK


def cmd_kappa(args) -> int:
    graph = read_digraph(args.file)
    x, y = args.source, args.target
    value = kappa(graph, x, y, limit=args.limit)
    uncuttable = graph.has_edge(x, y)
    print(f"kappa {value}")
    print(f"uncuttable {str(uncuttable).lower()}")
    count, paths = max_disjoint_paths(graph, x, y, limit=args.limit)
    print(f"disjoint_paths {count}")
    if args.paths:
        for path in paths:
            print(" ".join(map(str, path.vertices)))
    return EXIT_OK


def _extract_options(args) -> dict:
    return dict(exhaustive_cap=args.exhaustive_cap, sample=args.sample, seed=args.seed,
                scan_seed=args.scan_seed, threads=args.threads)


def cmd_extract(args) -> int:
    graph = read_digraph(args.file)
    report, trace = extract_core(graph, args.d, **_extract_options(args))
    if args.trace:
        write_trace(trace, args.trace)
    print(f"iterations {trace.r}")
    for rec in trace.records:
        print(f"iteration {rec.csv()} separator={' '.join(map(str, rec.separator))}")
    for line in report.lines():
        print(line)
    print("core " + " ".join(map(str, report.vertices)))
    return EXIT_OK if report.ok else EXIT_INVARIANT


def cmd_subdivide(args) -> int:
    graph = read_digraph(args.file)
    result = build_subdivision(graph, args.d, args.order, args.max_inner, **_extract_options(args))
    write_certificate(result.certificate, args.output)
    if args.trace:
        write_trace(result.trace, args.trace)
    plan = result.plan
    print(f"mode {'guarantee' if plan.guarantee else 'best-effort'}")
    print(f"order {plan.order}")
    print(f"max_inner {plan.max_inner if plan.max_inner is not None else 'unbounded'}")
    print(f"counting_inequality {'pass' if plan.counting_ok else 'fail'}")
    print(f"iterations {result.trace.r}")
    print("branch " + " ".join(map(str, result.certificate.branch)))
    longest = max((len(p.inner) for p in result.certificate.paths.values()), default=0)
    print(f"longest_inner {longest}")
    print("note inner vertices avoid all other branch vertices")
    for line in result.core.lines():
        print(line)
    print(f"certificate {args.output} verified")
    return EXIT_OK


def cmd_verify(args) -> int:
    graph = read_digraph(args.graph)
    cert = read_certificate(args.cert)
    problems = verify_certificate(graph, cert)
    if not problems:
        print("ok")
        return EXIT_OK
    for v in problems:
        print(v)
    return EXIT_REJECTED


def _add_extract_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", type=int, default=None, help="outdegree parameter (default: minimum outdegree)")
    p.add_argument("--trace", metavar="TRACEFILE")
    p.add_argument("--exhaustive-cap", type=int, default=DEFAULT_EXHAUSTIVE_CAP)
    p.add_argument("--sample", type=int, default=DEFAULT_SAMPLE, metavar="P")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled verification")
    p.add_argument("--scan-seed", type=int, default=None, help="shuffle the pair scan order")


def build_parser() -> argparse.ArgumentParser:
    default_threads = int(os.environ.get(THREADS_ENV, "1"))
    parser = argparse.ArgumentParser(prog="digraph-subdiv", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=default_threads,
                        help=f"cap on query parallelism (env {THREADS_ENV}, default 1)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated digraph")
    p.add_argument("--family", required=True, choices=sorted(generators.FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="degree statistics and derived bounds")
    p.add_argument("file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("kappa", help="local connectivity of one ordered pair")
    p.add_argument("file")
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--paths", action="store_true", help="print the disjoint path family")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("extract", help="extract a highly connected core")
    p.add_argument("file")
    _add_extract_flags(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("subdivide", help="build a certified complete-digraph subdivision")
    p.add_argument("file")
    _add_extract_flags(p)
    p.add_argument("--order", type=int, default=None, help="requested order (best effort)")
    p.add_argument("--max-inner", type=int, default=None, help="short-path bound (best effort)")
    p.add_argument("-o", "--output", required=True, metavar="CERTFILE")
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    _echo_config(args)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (SubdivisionFailure, NotEnoughBranchVertices) as exc:
        print(f"failure {exc}")
        return EXIT_BEST_EFFORT
    except (PreconditionError, GraphInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
