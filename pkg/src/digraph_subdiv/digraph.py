"""Immutable simple digraphs and the traversal primitives the algorithms share.

Vertices are the integers ``0 .. n-1``.  A graph never has loops and holds
each ordered pair at most once, although ``(u, v)`` and ``(v, u)`` may both
be present.  Graphs are built once and never mutated, so every query here is
safe to call from several threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import DuplicateEdge, LoopEdge, OutOfRange, ParseError

FORMAT_HEADER = "digraph v1"


@dataclass(frozen=True)
class Dipath:
    """A directed path ``source -> inner... -> target``."""

    source: int
    target: int
    inner: tuple[int, ...] = ()

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.source, *self.inner, self.target)

    def __len__(self) -> int:
        # number of edges
        return len(self.inner) + 1

    def is_valid_in(self, graph: "DiGraph") -> bool:
        verts = self.vertices
        if len(set(verts)) != len(verts):
            return False
        if not all(0 <= v < graph.order for v in verts):
            return False
        return all(graph.has_edge(a, b) for a, b in zip(verts, verts[1:]))


class DiGraph:
    """Simple loop-free digraph with sorted out- and in-adjacency lists.

    Use :func:`from_edge_list` to build one from untrusted input; the
    constructor itself assumes its arguments are already valid.
    """

    def __init__(self, order: int, out_adj: list[tuple[int, ...]], in_adj: list[tuple[int, ...]]):
        self.order = order
        self._out = out_adj
        self._in = in_adj
        self._size = sum(len(a) for a in out_adj)

    def __repr__(self) -> str:
        return f"DiGraph(order={self.order}, size={self._size})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiGraph):
            return NotImplemented
        return self.order == other.order and self._out == other._out

    def __hash__(self) -> int:
        return hash((self.order, tuple(self._out)))

    @property
    def size(self) -> int:
        """Number of edges."""
        return self._size

    def vertices(self) -> range:
        return range(self.order)

    def edges(self):
        """Yield all edges in lexicographic order."""
        for u, nbrs in enumerate(self._out):
            for v in nbrs:
                yield (u, v)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._in[v]

    def out_degree(self, v: int) -> int:
        self._check(v)
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        self._check(v)
        return len(self._in[v])

    def out_degrees(self) -> list[int]:
        return [len(a) for a in self._out]

    def in_degrees(self) -> list[int]:
        return [len(a) for a in self._in]

    def min_out_degree(self) -> int:
        # the empty graph has minimum outdegree 0 by convention
        return min(map(len, self._out), default=0)

    def min_in_degree(self) -> int:
        return min(map(len, self._in), default=0)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        """Out-neighbourhoods as integer bitsets (bit ``v`` set iff ``u -> v``)."""
        return tuple(_mask(a) for a in self._out)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        return tuple(_mask(a) for a in self._in)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return (self.out_masks[u] >> v) & 1 == 1

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.order):
            raise OutOfRange(f"vertex {v!r} not in [0, {self.order})", (v,))

    def check_vertices(self, vs: Iterable[int]) -> None:
        for v in vs:
            self._check(v)


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> DiGraph:
    """Build a digraph on ``n`` vertices, rejecting loops, duplicates and bad ids.

    Each error carries the offending pair in its ``pair`` attribute.
    """
    if n < 0:
        raise OutOfRange(f"negative order {n}")
    out_sets: list[set[int]] = [set() for _ in range(n)]
    for pair in pairs:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge {(u, v)} has an endpoint outside [0, {n})", (u, v))
        if u == v:
            raise LoopEdge(f"loop at vertex {u}", (u, v))
        if v in out_sets[u]:
            raise DuplicateEdge(f"edge {(u, v)} listed twice", (u, v))
        out_sets[u].add(v)
    return _from_out_sets(n, out_sets)


def _from_out_sets(n: int, out_sets) -> DiGraph:
    in_lists: list[list[int]] = [[] for _ in range(n)]
    out_adj = []
    for u in range(n):
        nbrs = tuple(sorted(out_sets[u]))
        out_adj.append(nbrs)
        for v in nbrs:
            in_lists[v].append(u)
    # sources are visited in ascending order, so in-lists are already sorted
    return DiGraph(n, out_adj, [tuple(a) for a in in_lists])


def induced_subdigraph(graph: DiGraph, keep: Iterable[int]) -> tuple[DiGraph, dict[int, int]]:
    """Return the subdigraph induced by ``keep`` and the relabelling old -> new.

    Kept vertices are renumbered ``0 .. k-1`` in ascending order of their old
    ids, so the relabelling is monotone and tie-breaks by id survive it.
    """
    kept = sorted(set(keep))
    graph.check_vertices(kept)
    relabel = {old: new for new, old in enumerate(kept)}
    out_sets = [
        {relabel[v] for v in graph.out_neighbors(old) if v in relabel}
        for old in kept
    ]
    return _from_out_sets(len(kept), out_sets), relabel


def vertices_reaching(graph: DiGraph, y: int, forbidden: Iterable[int] = ()) -> set[int]:
    """All vertices with a dipath to ``y`` in ``graph - forbidden`` (``y`` included)."""
    blocked = set(forbidden)
    graph.check_vertices(blocked)
    graph._check(y)
    if y in blocked:
        raise ValueError(f"target {y} is forbidden")
    seen = {y}
    queue = deque([y])
    in_adj = graph._in
    while queue:
        v = queue.popleft()
        for u in in_adj[v]:
            if u not in seen and u not in blocked:
                seen.add(u)
                queue.append(u)
    return seen


def undirected_component(graph: DiGraph, x: int, removed: Iterable[int] = ()) -> set[int]:
    """Weak component of ``x`` in ``graph - removed``."""
    blocked = set(removed)
    graph.check_vertices(blocked)
    graph._check(x)
    if x in blocked:
        raise ValueError(f"start vertex {x} is removed")
    seen = {x}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for nbrs in (graph._out[v], graph._in[v]):
            for u in nbrs:
                if u not in seen and u not in blocked:
                    seen.add(u)
                    queue.append(u)
    return seen


def shortest_dipath(
    graph: DiGraph,
    x: int,
    y: int,
    forbidden: Iterable[int] = (),
    max_inner: Optional[int] = None,
) -> Optional[Dipath]:
    """Breadth-first search for an ``x -> y`` dipath with fewest inner vertices.

    Inner vertices must avoid ``forbidden``; paths with more than
    ``max_inner`` inner vertices are not considered.  Neighbours are expanded
    in ascending order, which makes the returned path deterministic.  Returns
    None when no admissible path exists.
    """
    graph._check(x)
    graph._check(y)
    if x == y:
        raise ValueError("source and target coincide")
    blocked = forbidden if isinstance(forbidden, (set, frozenset)) else set(forbidden)
    if x in blocked or y in blocked:
        raise ValueError("endpoints may not be forbidden")
    if max_inner is None:
        max_inner = graph.order
    if max_inner < 0:
        return None
    out_adj = graph._out
    parent = {x: -1}
    depth = {x: 0}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if depth[u] > max_inner:
            continue
        for v in out_adj[u]:
            if v == y:
                inner = []
                while u != x:
                    inner.append(u)
                    u = parent[u]
                return Dipath(x, y, tuple(reversed(inner)))
            if v in parent or v in blocked:
                continue
            parent[v] = u
            depth[v] = depth[u] + 1
            queue.append(v)
    return None


# -- text format -----------------------------------------------------------

def format_digraph(graph: DiGraph) -> str:
    lines = [FORMAT_HEADER, f"{graph.order} {graph.size}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> DiGraph:
    """Parse the ``digraph v1`` text format.  Errors name the offending line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows or rows[0][1] != FORMAT_HEADER:
        raise ParseError(f"expected header {FORMAT_HEADER!r}", rows[0][0] if rows else None)
    if len(rows) < 2:
        raise ParseError("missing '<n> <m>' line")
    lineno, line = rows[1]
    n, m = _ints(line, 2, lineno)
    if n < 0 or m < 0:
        raise ParseError("negative counts", lineno)
    edge_rows = rows[2:]
    if len(edge_rows) != m:
        raise ParseError(f"header announces {m} edges, found {len(edge_rows)}", lineno)
    out_sets: list[set[int]] = [set() for _ in range(n)]
    for lineno, line in edge_rows:
        u, v = _ints(line, 2, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge {u} {v} out of range [0, {n})", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if v in out_sets[u]:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        out_sets[u].add(v)
    return _from_out_sets(n, out_sets)


def _ints(line: str, count: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {line!r}", lineno) from None


def read_digraph(path) -> DiGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_digraph(fh.read())


def write_digraph(graph: DiGraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_digraph(graph))
