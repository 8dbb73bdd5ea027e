"""Neighborhood-derived graphs: two-step, closed-neighborhood, and square.

All three keep the vertex labeling of the input; isolated vertices stay in
place and end up edgeless in every transform.
"""

from __future__ import annotations

import itertools

from .graph import Graph, remove_isolated
from .products import direct, strong

TRANSFORM_MODES = ("two-step", "closed-neighborhood", "square")

_FACTORIZATION_LIMIT = 10_000


def two_step(g: Graph) -> Graph:
    """Edge uv iff u and v (u != v) share a common neighbor in G."""
    edges = set()
    for w in range(g.n):
        for u, v in itertools.combinations(g.neighbors(w), 2):
            edges.add((u, v))
    return Graph(g.n, edges)


def closed_neighborhood(g: Graph) -> Graph:
    """Edge uv iff the closed neighborhoods N[u] and N[v] intersect (u != v)."""
    closed = [g.neighbor_set(v) | {v} for v in range(g.n)]
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(g.n), 2)
        if closed[u] & closed[v]
    ]
    return Graph(g.n, edges)


def square(g: Graph) -> Graph:
    """Edge uv iff 1 <= dist(u, v) <= 2, via a two-hop sweep per vertex."""
    edges = set()
    for v in range(g.n):
        reach = set(g.neighbors(v))
        for u in g.neighbors(v):
            reach.update(g.neighbors(u))
        reach.discard(v)
        for u in reach:
            if v < u:
                edges.add((v, u))
            else:
                edges.add((u, v))
    return Graph(g.n, edges)


def neighborhood_graph(mode: str, g: Graph) -> Graph:
    if mode == "two-step":
        return two_step(g)
    if mode == "closed-neighborhood":
        return closed_neighborhood(g)
    if mode == "square":
        return square(g)
    raise ValueError(f"unknown transform mode {mode!r} (expected one of {', '.join(TRANSFORM_MODES)})")


def check_two_step_factorization(g: Graph, h: Graph) -> tuple[bool, int]:
    """Compare two-step(G x H) with the strong product of the factors' two-steps.

    Left side: the two-step graph of the direct product.  Right side: the
    strong product of two-step(G-) and two-step(H-), re-embedded into the full
    |V(G)| x |V(H)| index space through the isolated-vertex removal maps.  The
    comparison is on labeled edge sets under the identity vertex map, which is
    exactly the map the factorization admits; the returned count is the number
    of isolated vertices of the left side.
    """
    if g.n * h.n > _FACTORIZATION_LIMIT:
        raise ValueError(
            f"factorization check capped at {_FACTORIZATION_LIMIT} product vertices"
        )
    left = two_step(direct(g, h))

    g_minus, g_removed = remove_isolated(g)
    h_minus, h_removed = remove_isolated(h)
    g_kept = [v for v in range(g.n) if v not in set(g_removed)]
    h_kept = [v for v in range(h.n) if v not in set(h_removed)]
    ng = two_step(g_minus)
    nh = two_step(h_minus)

    right_edges = set()
    if ng.n > 0 and nh.n > 0:
        for u, v in strong(ng, nh).edges():
            au, bu = divmod(u, nh.n)
            av, bv = divmod(v, nh.n)
            fu = g_kept[au] * h.n + h_kept[bu]
            fv = g_kept[av] * h.n + h_kept[bv]
            right_edges.add((fu, fv) if fu < fv else (fv, fu))

    holds = set(left.edges()) == right_edges
    isolated_count = sum(1 for v in range(left.n) if left.degree(v) == 0)
    return holds, isolated_count
