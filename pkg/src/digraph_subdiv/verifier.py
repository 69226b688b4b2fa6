"""Independent checks for certificates, cores and disjoint path families.

Nothing produced by the builder or extractor is trusted here: certificates
are re-parsed from their text form and core conditions are recomputed on a
freshly induced subdigraph.  All violations are collected before returning.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .connectivity import kappa
from .digraph import DiGraph, Dipath, induced_subdigraph
from .errors import ParseError
from .params import CoreReport, Params

CERT_HEADER = "subdivision-cert v1"
DEFAULT_SAMPLE = 500


@dataclass(frozen=True, order=True)
class Violation:
    kind: str
    pair: tuple[int, ...] = ()
    detail: str = ""

    def __str__(self) -> str:
        where = "->".join(map(str, self.pair)) if self.pair else "-"
        return f"{self.kind} {where} {self.detail}".rstrip()


@dataclass
class ParsedCertificate:
    """Plain, mutable view of a certificate file; may be arbitrarily wrong."""

    graph_order: int
    branch: list[int] = field(default_factory=list)
    paths: list[tuple[int, int, list[int]]] = field(default_factory=list)

    def to_text(self) -> str:
        lines = [CERT_HEADER, f"graph-order {self.graph_order}",
                 " ".join(["branch", str(len(self.branch)), *map(str, self.branch)])]
        for u, v, inner in self.paths:
            lines.append(" ".join(["path", str(u), str(v), str(len(inner)), *map(str, inner)]))
        return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> ParsedCertificate:
    lines = text.splitlines()
    if not lines or lines[0].strip() != CERT_HEADER:
        raise ParseError(f"expected header {CERT_HEADER!r}", 1)
    if len(lines) < 3:
        raise ParseError("truncated certificate", len(lines) + 1)
    head = lines[1].split()
    if len(head) != 2 or head[0] != "graph-order":
        raise ParseError("expected 'graph-order <n>'", 2)
    order = _int(head[1], 2)
    tokens = lines[2].split()
    if len(tokens) < 2 or tokens[0] != "branch":
        raise ParseError("expected 'branch <k> <v1> ... <vk>'", 3)
    k = _int(tokens[1], 3)
    if len(tokens) != k + 2:
        raise ParseError(f"branch line announces {k} vertices, lists {len(tokens) - 2}", 3)
    cert = ParsedCertificate(order, [_int(t, 3) for t in tokens[2:]])
    for lineno, line in enumerate(lines[3:], start=4):
        tokens = line.split()
        if not tokens:
            continue
        if tokens[0] != "path" or len(tokens) < 4:
            raise ParseError("expected 'path <u> <v> <t> <w1> ... <wt>'", lineno)
        u, v, t = (_int(s, lineno) for s in tokens[1:4])
        if len(tokens) != t + 4:
            raise ParseError(f"path announces {t} inner vertices, lists {len(tokens) - 4}", lineno)
        cert.paths.append((u, v, [_int(s, lineno) for s in tokens[4:]]))
    return cert


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno) from None


def read_certificate(path) -> ParsedCertificate:
    with open(path, encoding="utf-8") as fh:
        return parse_certificate(fh.read())


def verify_certificate(graph: DiGraph, cert) -> list[Violation]:
    """Check a subdivision certificate against ``graph``; empty list means valid.

    ``cert`` may be certificate text, a :class:`ParsedCertificate`, or any
    object with ``to_text()``, which is serialised and parsed again.
    """
    if isinstance(cert, str):
        cert = parse_certificate(cert)
    elif not isinstance(cert, ParsedCertificate):
        cert = parse_certificate(cert.to_text())

    found: list[Violation] = []
    n = graph.order
    if cert.graph_order != n:
        found.append(Violation("order-mismatch", (), f"certificate {cert.graph_order}, graph {n}"))

    branch_set = set()
    for b in cert.branch:
        if not 0 <= b < n:
            found.append(Violation("branch-out-of-range", (b,)))
        if b in branch_set:
            found.append(Violation("duplicate-branch", (b,)))
        branch_set.add(b)

    seen_pairs: set[tuple[int, int]] = set()
    owner: dict[int, tuple[int, int]] = {}
    for u, v, inner in cert.paths:
        pair = (u, v)
        if u == v or u not in branch_set or v not in branch_set:
            found.append(Violation("foreign-pair", pair))
        if pair in seen_pairs:
            found.append(Violation("duplicate-pair", pair))
        seen_pairs.add(pair)

        verts = [u, *inner, v]
        bad = [w for w in verts if not 0 <= w < n]
        if bad:
            found.append(Violation("vertex-out-of-range", pair, f"vertices {bad}"))
            continue
        if len(set(verts)) != len(verts):
            found.append(Violation("repeated-vertex", pair))
        for w in inner:
            if w in branch_set and w not in pair:
                found.append(Violation("branch-as-inner", pair, f"vertex {w}"))
        for a, b in zip(verts, verts[1:]):
            if not graph.has_edge(a, b):
                found.append(Violation("edge-missing", pair, f"edge {a}->{b}"))
        for w in set(inner):
            if w in owner and owner[w] != pair:
                found.append(Violation("shared-inner", pair, f"vertex {w} also on {owner[w][0]}->{owner[w][1]}"))
            owner.setdefault(w, pair)

    distinct = sorted(branch_set)
    for u in distinct:
        for v in distinct:
            if u != v and (u, v) not in seen_pairs:
                found.append(Violation("missing-pair", (u, v)))
    return sorted(found)


def verify_disjoint_family(graph: DiGraph, x: int, y: int, paths: Iterable[Dipath]) -> list[Violation]:
    """Each path must be a valid ``x -> y`` dipath and inner sets pairwise disjoint."""
    found = []
    owner: dict[int, int] = {}
    for i, path in enumerate(paths):
        if (path.source, path.target) != (x, y):
            found.append(Violation("wrong-endpoints", (i,), f"{path.source}->{path.target}"))
        if not path.is_valid_in(graph):
            found.append(Violation("invalid-path", (i,), str(path.vertices)))
        for w in path.inner:
            if w in owner:
                found.append(Violation("shared-inner", (owner[w], i), f"vertex {w}"))
            else:
                owner[w] = i
    return sorted(found)


def _sample_pairs(order: int, targets: Sequence[int], count: int, seed: int):
    """Uniform sample without replacement of pairs ``(x, y)``, ``y`` in targets, ``x != y``."""
    space = len(targets) * (order - 1)
    rng = random.Random(seed)
    picks = sorted(rng.sample(range(space), min(count, space)))
    pairs = []
    for idx in picks:
        y = targets[idx // (order - 1)]
        x = idx % (order - 1)
        if x >= y:
            x += 1
        pairs.append((x, y))
    return pairs


def verify_core(
    graph: DiGraph,
    vertices: Iterable[int],
    n: int,
    d: int,
    *,
    sample: Optional[int] = None,
    seed: int = 0,
    threads: int = 1,
) -> CoreReport:
    """Recompute conditions (i)-(iii) for the subdigraph induced by ``vertices``.

    With ``sample=None`` every qualifying ordered pair is checked; otherwise
    ``sample`` pairs are drawn uniformly (without replacement) using ``seed``.
    Pairs joined by an edge count as satisfying (ii): no vertex set can
    separate them.
    """
    params = Params(n, d)
    core, relabel = induced_subdigraph(graph, vertices)
    labels = tuple(sorted(relabel, key=relabel.__getitem__))
    order = core.order
    indeg = core.in_degrees()
    targets = [v for v in range(order) if params.high_indegree(indeg[v])]
    min_out = core.min_out_degree()

    if sample is None:
        pairs = [(x, y) for y in targets for x in range(order) if x != y]
        mode = "exhaustive"
    else:
        pairs = _sample_pairs(order, targets, sample, seed) if order > 1 else []
        mode = "sampled"

    need = params.kappa_needed

    def check(pair):
        x, y = pair
        if core.has_edge(x, y):
            return ("edge", order - 2)
        k = kappa(core, x, y, limit=need)
        return ("ok" if params.kappa_ok(k) else "fail", k)

    if threads > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check, pairs, chunksize=64))
    else:
        results = [check(p) for p in pairs]

    failures = []
    uncuttable = capped = 0
    for (x, y), (status, k) in zip(pairs, results):
        if status == "edge":
            uncuttable += 1
            if not params.kappa_ok(k):
                capped += 1
        elif status == "fail":
            failures.append((labels[x], labels[y], k))

    return CoreReport(
        params=params,
        vertices=labels,
        graph=core,
        min_out_degree=min_out,
        high_indegree_count=len(targets),
        cond_i=params.outdegree_ok(min_out),
        cond_ii=not failures,
        cond_iii=params.count_ok(len(targets)),
        mode=mode,
        checked_pairs=tuple((labels[x], labels[y]) for x, y in pairs),
        failures=tuple(failures),
        uncuttable_pairs=uncuttable,
        capped_below=capped,
        seed=None if sample is None else seed,
    )
