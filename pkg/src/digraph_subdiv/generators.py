"""Deterministic graph families used by the tests, benchmarks and the ``gen`` command.

Random instances come from :class:`random.Random` (MT19937) seeded with the
given integer.  ``random_out_regular`` draws, for ``v = 0, 1, ..., n-1`` in
turn, ``rng.sample(others, d)`` where ``others`` is ``[0 .. n-1]`` without
``v`` in ascending order.  Keeping this exact call sequence keeps instances
reproducible.
"""

from __future__ import annotations

import random

from .digraph import DiGraph, _from_out_sets


def complete_digraph(k: int) -> DiGraph:
    if k < 0:
        raise ValueError("k must be non-negative")
    return _from_out_sets(k, [[v for v in range(k) if v != u] for u in range(k)])


def complete_bipartite_digraph(m: int) -> DiGraph:
    """Classes ``[0, m)`` and ``[m, 2m)`` with both orientations of every cross edge."""
    if m < 1:
        raise ValueError("m must be positive")
    left, right = range(m), range(m, 2 * m)
    return _from_out_sets(2 * m, [list(right) for _ in left] + [list(left) for _ in right])


def oriented_bipartite(m: int) -> DiGraph:
    """Every edge from ``[0, m)`` to ``[m, 2m)``; the second class are sinks."""
    if m < 1:
        raise ValueError("m must be positive")
    return _from_out_sets(2 * m, [list(range(m, 2 * m)) for _ in range(m)] + [[] for _ in range(m)])


def two_cliques_bottleneck(a: int) -> DiGraph:
    """Complete digraphs on ``A = [0, a)`` and ``B = [a+1, 2a+1)`` joined through ``w = a``.

    The only cross edges are ``0 -> w`` and ``w -> b`` for every ``b`` in ``B``,
    so ``{w}`` separates every vertex of ``A`` from every vertex of ``B``.
    """
    if a < 3:
        raise ValueError("a must be at least 3")
    w = a
    out = [[v for v in range(a) if v != u] for u in range(a)]
    out[0].append(w)
    out.append(list(range(a + 1, 2 * a + 1)))
    out.extend([v for v in range(a + 1, 2 * a + 1) if v != u] for u in range(a + 1, 2 * a + 1))
    return _from_out_sets(2 * a + 1, out)


def random_out_regular(n: int, d: int, seed: int) -> DiGraph:
    """Every vertex gets exactly ``d`` distinct out-neighbours, uniformly at random."""
    if not 0 <= d <= max(n - 1, 0):
        raise ValueError(f"need 0 <= d <= n-1, got n={n}, d={d}")
    rng = random.Random(seed)
    out = []
    for v in range(n):
        others = [u for u in range(n) if u != v]
        out.append(rng.sample(others, d))
    return _from_out_sets(n, out)


def random_digraph(n: int, p: float, seed: int) -> DiGraph:
    """Each ordered pair ``(u, v)``, ``u != v``, is an edge independently with probability ``p``."""
    rng = random.Random(seed)
    out = [[v for v in range(n) if v != u and rng.random() < p] for u in range(n)]
    return _from_out_sets(n, out)


FAMILIES = {
    "complete": complete_digraph,
    "bipartite-digraph": complete_bipartite_digraph,
    "oriented-bipartite": oriented_bipartite,
    "bottleneck": two_cliques_bottleneck,
    "random-out-regular": random_out_regular,
}
