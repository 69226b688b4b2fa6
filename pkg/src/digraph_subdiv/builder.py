"""Greedy construction of a subdivided complete digraph inside the extracted core.

Branch vertices are high-indegree vertices of the core.  Every ordered pair
of them is joined, one after another, by a shortest dipath with at most
``floor(8n^2/d^2)`` inner vertices that avoids all earlier inner vertices
and all other branch vertices.  When the order is ``floor(d^2/(8 n^1.5))``
the counting bound ``64 n^3 (l^2 - 1) < d^4`` leaves enough short paths for
every pair, so a failure in that mode is treated as a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Optional

from .digraph import DiGraph, Dipath, shortest_dipath
from .errors import (InvariantViolation, NotEnoughBranchVertices, PreconditionError,
                     SubdivisionFailure)
from .extractor import ExtractionTrace, extract_core
from .params import CoreReport
from .verifier import CERT_HEADER, verify_certificate


def order_bound(n: int, d: int) -> int:
    """``floor(d^2 / (8 n^(3/2)))`` in exact integer arithmetic."""
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    # floor(sqrt(a/b)) == isqrt(a // b) for non-negative integers
    return isqrt(d ** 4 // (64 * n ** 3))


def short_bound(n: int, d: int) -> int:
    """Largest inner-vertex count of a short dipath, ``floor(8n^2/d^2)``."""
    if d == 0:
        raise ZeroDivisionError("short-path bound undefined for d = 0")
    return 8 * n * n // (d * d)


def counting_inequality_holds(n: int, d: int, order: int) -> bool:
    """``(l^2 - 1) 8n^2/d^2 < d^2/(8n)``, cross-multiplied."""
    return 64 * n ** 3 * (order * order - 1) < d ** 4


@dataclass(frozen=True)
class BuildPlan:
    order: int
    max_inner: Optional[int]
    guarantee: bool
    counting_ok: bool


@dataclass
class SubdivisionCertificate:
    host_order: int
    branch: list[int]
    paths: dict[tuple[int, int], Dipath] = field(default_factory=dict)

    def ordered_pairs(self):
        for u in self.branch:
            for v in self.branch:
                if u != v:
                    yield (u, v)

    def relabel(self, labels, host_order: int) -> "SubdivisionCertificate":
        """Translate vertex ``k`` to ``labels[k]``, giving a certificate for the host graph."""
        paths = {
            (labels[u], labels[v]): Dipath(labels[u], labels[v], tuple(labels[w] for w in p.inner))
            for (u, v), p in self.paths.items()
        }
        return SubdivisionCertificate(host_order, [labels[b] for b in self.branch], paths)

    def to_text(self) -> str:
        lines = [CERT_HEADER, f"graph-order {self.host_order}",
                 " ".join(["branch", str(len(self.branch)), *map(str, self.branch)])]
        for u, v in self.ordered_pairs():
            inner = self.paths[(u, v)].inner
            lines.append(" ".join(["path", str(u), str(v), str(len(inner)), *map(str, inner)]))
        return "\n".join(lines) + "\n"


def select_branch_vertices(graph: DiGraph, d: int, order: int, labels=None) -> list[int]:
    """The ``order`` vertices with ``2 * indegree >= d`` of highest indegree, ties by id.

    ``labels`` maps vertices of ``graph`` to the ids to report.
    """
    indeg = graph.in_degrees()
    eligible = sorted((v for v in range(graph.order) if 2 * indeg[v] >= d),
                      key=lambda v: (-indeg[v], v))
    if len(eligible) < order:
        raise NotEnoughBranchVertices(order, len(eligible))
    chosen = eligible[:order]
    return chosen if labels is None else [labels[v] for v in chosen]


def connect_pairs_greedy(graph: DiGraph, branch: list[int], max_inner: Optional[int]) -> SubdivisionCertificate:
    """Join every ordered branch pair by a short dipath, internally disjoint from all others.

    Raises SubdivisionFailure naming the first pair that cannot be joined.
    """
    if len(set(branch)) != len(branch):
        raise PreconditionError("branch vertices must be distinct")
    graph.check_vertices(branch)
    branch_set = set(branch)
    used: set[int] = set()
    cert = SubdivisionCertificate(graph.order, list(branch))
    for u, v in cert.ordered_pairs():
        forbidden = (branch_set - {u, v}) | used
        path = shortest_dipath(graph, u, v, forbidden, max_inner)
        if path is None:
            raise SubdivisionFailure((u, v), len(forbidden), len(cert.paths), max_inner)
        used.update(path.inner)
        cert.paths[(u, v)] = path
    return cert


@dataclass
class BuildResult:
    certificate: SubdivisionCertificate
    core: CoreReport
    trace: ExtractionTrace
    plan: BuildPlan


def build_subdivision(
    graph: DiGraph,
    d: Optional[int] = None,
    order: Optional[int] = None,
    max_inner: Optional[int] = None,
    **extract_options,
) -> BuildResult:
    """Extract a core, pick branch vertices and connect them greedily.

    Without ``order`` and ``max_inner`` overrides the run is in guarantee mode:
    the counting inequality is asserted and any failure to connect is an
    InvariantViolation.  With overrides the run is best effort and failures
    surface as SubdivisionFailure or NotEnoughBranchVertices.
    """
    core, trace = extract_core(graph, d, **extract_options)
    n, d = core.params.n, core.params.d
    guarantee = order is None and max_inner is None
    if order is None:
        order = order_bound(n, d) if n else 0
    if max_inner is None and d > 0:
        max_inner = short_bound(n, d)
    plan = BuildPlan(order, max_inner, guarantee,
                     counting_inequality_holds(n, d, order) if n else True)
    if guarantee and not plan.counting_ok:
        raise InvariantViolation(f"counting inequality fails for n={n}, d={d}, order={order}")

    try:
        branch = select_branch_vertices(core.graph, d, order)
        local = connect_pairs_greedy(core.graph, branch, max_inner)
    except (SubdivisionFailure, NotEnoughBranchVertices) as exc:
        if guarantee:
            raise InvariantViolation(f"guarantee-mode construction failed: {exc}") from exc
        if isinstance(exc, SubdivisionFailure):
            u, v = exc.pair
            raise SubdivisionFailure((core.vertices[u], core.vertices[v]), exc.forbidden_size,
                                     exc.connected, exc.max_inner) from None
        raise
    cert = local.relabel(core.vertices, graph.order)
    problems = verify_certificate(graph, cert)
    if problems:
        raise InvariantViolation("builder produced an invalid certificate: "
                                 + "; ".join(map(str, problems)))
    return BuildResult(cert, core, trace, plan)


def write_certificate(cert: SubdivisionCertificate, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(cert.to_text())
