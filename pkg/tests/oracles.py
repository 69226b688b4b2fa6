"""Brute-force reference computations, written without the package's algorithms."""

from itertools import combinations


def adjacency(n, edges):
    out = {v: set() for v in range(n)}
    for u, v in edges:
        out[u].add(v)
    return out


def simple_paths(out, x, y):
    """Every simple x -> y path as a vertex tuple, by exhaustive DFS."""
    found = []

    def walk(path):
        u = path[-1]
        for v in sorted(out[u]):
            if v == y:
                found.append(tuple(path) + (y,))
            elif v not in path:
                walk(path + [v])

    walk([x])
    return found


def max_disjoint_family_size(out, x, y):
    """Largest set of x -> y paths with pairwise disjoint inner vertices (exhaustive search)."""
    paths = [frozenset(p[1:-1]) for p in simple_paths(out, x, y)]
    best = 0

    def grow(start, used, size):
        nonlocal best
        best = max(best, size)
        for i in range(start, len(paths)):
            if not (paths[i] & used):
                grow(i + 1, used | paths[i], size + 1)

    grow(0, frozenset(), 0)
    return best


def reaches(out, x, y, removed):
    seen, stack = {x}, [x]
    while stack:
        u = stack.pop()
        for v in out[u]:
            if v == y:
                return True
            if v not in seen and v not in removed:
                seen.add(v)
                stack.append(v)
    return False


def min_separator_size(out, n, x, y):
    """Size of a smallest vertex set avoiding x, y that kills every x -> y path, or None if x -> y is an edge."""
    if y in out[x]:
        return None
    others = [v for v in range(n) if v not in (x, y)]
    for k in range(len(others) + 1):
        for s in combinations(others, k):
            if not reaches(out, x, y, set(s)):
                return k


def kappa_by_definition(out, n, x, y):
    """Largest 1 <= k <= n-2 such that every set of fewer than k other vertices leaves a path; 0 if no path."""
    if not reaches(out, x, y, set()):
        return 0
    others = [v for v in range(n) if v not in (x, y)]
    best = 0
    for k in range(1, n - 1):
        if all(reaches(out, x, y, set(s)) for size in range(k) for s in combinations(others, size)):
            best = k
        else:
            break
    return best


def fewest_inner(out, x, y, forbidden, max_inner):
    """Minimum inner-vertex count over admissible simple paths, or None."""
    counts = [len(p) - 2 for p in simple_paths(out, x, y)
              if not (set(p[1:-1]) & forbidden) and len(p) - 2 <= max_inner]
    return min(counts, default=None)
