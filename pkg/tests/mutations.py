"""Seeded single-mutation corruptions of a valid certificate, one per violation class."""

import copy
import random

from digraph_subdiv.verifier import ParsedCertificate

CLASSES = ("edge-missing", "shared-inner", "branch-as-inner", "missing-pair", "duplicate-branch")


def _used(cert):
    used = set(cert.branch)
    for _, _, inner in cert.paths:
        used.update(inner)
    return used


def mutate(cert: ParsedCertificate, graph, kind: str, rng: random.Random) -> ParsedCertificate:
    cert = copy.deepcopy(cert)
    paths = cert.paths
    if kind == "edge-missing":
        free = [v for v in graph.vertices() if v not in _used(cert)]
        while True:
            i = rng.randrange(len(paths))
            u, v, inner = paths[i]
            pos = rng.randrange(len(inner) + 1)
            z = rng.choice(free)
            verts = [u, *inner, v]
            if not graph.has_edge(verts[pos], z) or not graph.has_edge(z, verts[pos + 1]):
                inner.insert(pos, z)
                return cert
    if kind == "shared-inner":
        donors = [p for p in paths if p[2]]
        u0, v0, inner0 = rng.choice(donors)
        z = rng.choice(inner0)
        i = rng.choice([k for k, p in enumerate(paths) if (p[0], p[1]) != (u0, v0)])
        inner = paths[i][2]
        inner.insert(rng.randrange(len(inner) + 1), z)
        return cert
    if kind == "branch-as-inner":
        i = rng.randrange(len(paths))
        u, v, inner = paths[i]
        b = rng.choice([b for b in cert.branch if b not in (u, v)])
        inner.insert(rng.randrange(len(inner) + 1), b)
        return cert
    if kind == "missing-pair":
        del paths[rng.randrange(len(paths))]
        return cert
    if kind == "duplicate-branch":
        i, j = rng.sample(range(len(cert.branch)), 2)
        cert.branch[i] = cert.branch[j]
        return cert
    raise ValueError(kind)
