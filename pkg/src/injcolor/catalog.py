"""Exhaustive catalogs of small graphs up to isomorphism.

Used by the acceptance suite to draw pairs from the full space of
non-isomorphic graphs on up to six vertices.  Enumeration walks every edge
subset, buckets by a cheap invariant signature (degree sequence, sorted
neighbor-degree profiles, triangle count) and settles collisions with the
exact small-graph isomorphism test.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .graph import Graph, isomorphic_small, stats

_ENUM_LIMIT = 6


def _signature(g: Graph) -> tuple:
    degs = g.degrees()
    profiles = tuple(sorted(tuple(sorted(degs[u] for u in g.neighbors(v))) for v in range(g.n)))
    triangles = sum(
        1
        for u, v, w in itertools.combinations(range(g.n), 3)
        if g.has_edge(u, v) and g.has_edge(u, w) and g.has_edge(v, w)
    )
    return (g.n, g.m, tuple(sorted(degs)), profiles, triangles)


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism (n <= 6), deterministic order."""
    if not 0 <= n <= _ENUM_LIMIT:
        raise ValueError(f"catalog enumeration is capped at {_ENUM_LIMIT} vertices")
    pairs = list(itertools.combinations(range(n), 2))
    buckets: dict[tuple, list[Graph]] = {}
    reps: list[Graph] = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = Graph(n, edges)
        sig = _signature(g)
        bucket = buckets.setdefault(sig, [])
        if not any(isomorphic_small(g, rep) for rep in bucket):
            bucket.append(g)
            reps.append(g)
    return tuple(reps)


def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in nonisomorphic_graphs(n) if stats(g).component_count == 1)


def graphs_without_isolated(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in nonisomorphic_graphs(n) if n > 0 and min(g.degrees()) >= 1)
