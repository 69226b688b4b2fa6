"""Local vertex connectivity between two vertices of a digraph.

Internally disjoint ``x -> y`` dipaths are counted as a maximum flow in the
usual vertex-split network: every vertex ``v`` other than ``x`` and ``y`` is
replaced by an arc ``v_in -> v_out`` of capacity one, and every edge ``u -> v``
becomes an arc ``u_out -> v_in``.  Edge arcs are uncapacitated so that every
minimum cut consists of vertex arcs only, except the direct edge ``x -> y``
which is capped at one (it is a path with no inner vertex).

The flow is computed with Dinic's algorithm (level graph plus blocking flow).
Before any network is built the flow is seeded with the direct edge and all
length-two paths through common neighbours, found with a single bitset AND;
on dense graphs this alone usually reaches the requested limit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .digraph import DiGraph, Dipath, shortest_dipath
from .errors import TooLarge

_UNBOUNDED = 1 << 30
BRUTE_FORCE_MAX_ORDER = 15


@dataclass(frozen=True)
class DisjointPaths:
    count: int
    paths: tuple[Dipath, ...]


@dataclass(frozen=True)
class Separator:
    """``vertices`` meets every ``x -> y`` dipath; ``witness`` is the matching path count."""

    vertices: frozenset[int]
    witness: int

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Uncuttable:
    """The edge ``x -> y`` is present, so no vertex set separates the pair."""

    direct_edge: bool = True


SeparationResult = Union[DisjointPaths, Separator, Uncuttable]


class FlowNetwork:
    """Unit vertex-capacity flow network for one ordered pair ``(x, y)``.

    Node ``2v`` is ``v_in`` and ``2v + 1`` is ``v_out``.  Arcs are stored in
    parallel lists with the reverse of arc ``e`` at ``e ^ 1``.
    """

    def __init__(self, graph: DiGraph, x: int, y: int):
        self.graph = graph
        self.x = x
        self.y = y
        self.source = 2 * x + 1
        self.sink = 2 * y
        nodes = 2 * graph.order
        adj: list[list[int]] = [[] for _ in range(nodes)]
        to: list[int] = []
        cap: list[int] = []
        self.adj, self.to, self.cap = adj, to, cap

        def add(u, v, c):
            adj[u].append(len(to))
            to.append(v)
            cap.append(c)
            adj[v].append(len(to))
            to.append(u)
            cap.append(0)

        for v in range(graph.order):
            if v != x and v != y:
                add(2 * v, 2 * v + 1, 1)
        self._first_hop = {}   # v -> arc x_out -> v_in
        self._last_hop = {}    # v -> arc v_out -> y_in
        for u, nbrs in enumerate(graph._out):
            if u == y:
                continue
            for v in nbrs:
                if v == x:
                    continue
                if u == x:
                    self._first_hop[v] = len(to)
                if v == y:
                    self._last_hop[u] = len(to)
                add(2 * u + 1, 2 * v, 1 if (u == x and v == y) else _UNBOUNDED)
        self.value = 0

    def _push_arc(self, e: int) -> None:
        self.cap[e] -= 1
        self.cap[e ^ 1] += 1

    def seed(self, via: list[int]) -> None:
        """Route one unit along ``x -> z -> y`` for each ``z`` in ``via`` (``y`` means the direct edge)."""
        for z in via:
            if z == self.y:
                self._push_arc(self._first_hop[z])
            else:
                self._push_arc(self._first_hop[z])
                self._push_arc(self.adj[2 * z][0])  # internal arc is added first
                self._push_arc(self._last_hop[z])
            self.value += 1

    def _levels(self) -> Optional[list[int]]:
        level = [-1] * len(self.adj)
        level[self.source] = 0
        queue = deque([self.source])
        adj, to, cap = self.adj, self.to, self.cap
        while queue:
            u = queue.popleft()
            for e in adj[u]:
                v = to[e]
                if cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[self.sink] >= 0 else None

    def _blocking_flow(self, level: list[int], budget: int) -> int:
        adj, to, cap = self.adj, self.to, self.cap
        source, sink = self.source, self.sink
        it = [0] * len(adj)
        pushed = 0
        path: list[int] = []
        u = source
        while pushed < budget:
            if u == sink:
                # every vertex arc has capacity one, so each path carries one unit
                for e in path:
                    cap[e] -= 1
                    cap[e ^ 1] += 1
                pushed += 1
                path.clear()
                u = source
                continue
            arcs = adj[u]
            i = it[u]
            while i < len(arcs):
                e = arcs[i]
                if cap[e] > 0 and level[to[e]] == level[u] + 1:
                    break
                i += 1
            it[u] = i
            if i < len(arcs):
                path.append(arcs[i])
                u = to[arcs[i]]
            else:
                if u == source:
                    break
                level[u] = -1
                e = path.pop()
                u = to[e ^ 1]
                it[u] += 1
        return pushed

    def run(self, limit: Optional[int] = None) -> int:
        """Augment until maximum or until the flow value reaches ``limit``."""
        while limit is None or self.value < limit:
            level = self._levels()
            if level is None:
                break
            budget = _UNBOUNDED if limit is None else limit - self.value
            self.value += self._blocking_flow(level, budget)
        return self.value

    def decode_paths(self) -> list[Dipath]:
        """Split the integral flow into dipaths, taking the lowest-id flow arc at each step."""
        adj, to, cap = self.adj, self.to, self.cap
        # forward arcs have even index; their flow equals the reverse arc's capacity
        used = {e for arcs in adj for e in arcs if e % 2 == 0 and cap[e ^ 1] > 0}
        paths = []
        for _ in range(self.value):
            node = self.source
            inner = []
            while node != self.sink:
                e = next(e for e in adj[node] if e in used)
                used.discard(e)
                node = to[e]
                if node % 2 == 0 and node != self.sink:
                    inner.append(node // 2)
            paths.append(Dipath(self.x, self.y, tuple(inner)))
        return paths

    def residual_reachable(self) -> set[int]:
        seen = {self.source}
        queue = deque([self.source])
        adj, to, cap = self.adj, self.to, self.cap
        while queue:
            u = queue.popleft()
            for e in adj[u]:
                v = to[e]
                if cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def _check_pair(graph: DiGraph, x: int, y: int) -> None:
    graph._check(x)
    graph._check(y)
    if x == y:
        raise ValueError("x and y must differ")


def _short_routes(graph: DiGraph, x: int, y: int) -> list[int]:
    """Second vertices of the direct edge and of all ``x -> z -> y`` paths, ascending."""
    common = graph.out_masks[x] & graph.in_masks[y]
    routes = []
    while common:
        low = common & -common
        routes.append(low.bit_length() - 1)
        common ^= low
    if (graph.out_masks[x] >> y) & 1:
        routes.append(y)
        routes.sort()
    return routes


def _short_route_count(graph: DiGraph, x: int, y: int) -> int:
    return (graph.out_masks[x] & graph.in_masks[y]).bit_count() + ((graph.out_masks[x] >> y) & 1)


def max_disjoint_paths(
    graph: DiGraph, x: int, y: int, limit: Optional[int] = None
) -> tuple[int, list[Dipath]]:
    """Maximum family of internally disjoint ``x -> y`` dipaths, truncated at ``limit``.

    The direct edge, when present, counts as one path with no inner vertex.
    Augmentation stops as soon as ``limit`` paths are routed.
    """
    _check_pair(graph, x, y)
    routes = _short_routes(graph, x, y)
    if limit is not None and len(routes) >= limit:
        return limit, [
            Dipath(x, y, () if z == y else (z,)) for z in routes[:limit]
        ]
    net = FlowNetwork(graph, x, y)
    net.seed(routes)
    net.run(limit)
    return net.value, net.decode_paths()


def disjoint_path_count(graph: DiGraph, x: int, y: int, limit: Optional[int] = None) -> int:
    """Same count as :func:`max_disjoint_paths` without decoding the paths."""
    _check_pair(graph, x, y)
    quick = _short_route_count(graph, x, y)
    if limit is not None and quick >= limit:
        return limit
    if limit == 1:
        # one path is just reachability
        return 0 if shortest_dipath(graph, x, y) is None else 1
    net = FlowNetwork(graph, x, y)
    net.seed(_short_routes(graph, x, y))
    return net.run(limit)


def min_vertex_separator(graph: DiGraph, x: int, y: int) -> Union[Separator, Uncuttable]:
    """Minimum ``x``-``y`` vertex separator read off a minimum cut.

    A vertex is in the separator when its in-half is reachable from ``x`` in
    the residual network and its out-half is not.
    """
    _check_pair(graph, x, y)
    if graph.has_edge(x, y):
        return Uncuttable()
    net = FlowNetwork(graph, x, y)
    net.seed(_short_routes(graph, x, y))
    net.run()
    reach = net.residual_reachable()
    sep = frozenset(
        v for v in range(graph.order)
        if v != x and v != y and 2 * v in reach and 2 * v + 1 not in reach
    )
    return Separator(sep, net.value)


def kappa(graph: DiGraph, x: int, y: int, limit: Optional[int] = None) -> int:
    """Local connectivity of ``(x, y)`` with the ``|G| - 2`` cap, optionally truncated at ``limit``.

    Zero when no dipath exists.  Adjacent pairs cannot be separated and get
    the cap; otherwise the value is the number of internally disjoint dipaths,
    which never exceeds the cap.
    """
    _check_pair(graph, x, y)
    if (graph.out_masks[x] >> y) & 1:
        value = graph.order - 2
        return value if limit is None else min(value, limit)
    return disjoint_path_count(graph, x, y, limit)


def _has_dipath_avoiding(graph: DiGraph, x: int, y: int, blocked: set[int]) -> bool:
    seen = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        for v in graph._out[u]:
            if v == y:
                return True
            if v not in seen and v not in blocked:
                seen.add(v)
                stack.append(v)
    return False


def brute_force_separator(graph: DiGraph, x: int, y: int) -> Union[Separator, Uncuttable]:
    """Smallest separator by exhaustive subset search, for cross-checking the flow code."""
    if graph.order > BRUTE_FORCE_MAX_ORDER:
        raise TooLarge(f"brute force limited to {BRUTE_FORCE_MAX_ORDER} vertices, got {graph.order}")
    _check_pair(graph, x, y)
    if graph.has_edge(x, y):
        return Uncuttable()
    others = [v for v in range(graph.order) if v != x and v != y]
    for size in range(len(others) + 1):
        for subset in combinations(others, size):
            if not _has_dipath_avoiding(graph, x, y, set(subset)):
                return Separator(frozenset(subset), size)
    raise AssertionError("removing every other vertex always separates a non-adjacent pair")
