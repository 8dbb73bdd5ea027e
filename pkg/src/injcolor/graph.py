"""Immutable simple-graph core: the Graph type, named families, and structural utilities.

Vertices are dense integers 0..n-1.  Every constructor validates the simple-graph
invariants (no self-loops, symmetric adjacency, sorted duplicate-free neighbor
lists), so a Graph value can always be trusted downstream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

_MASK64 = 0xFFFFFFFFFFFFFFFF

FAMILIES = ("path", "cycle", "complete", "star", "empty", "random-tree", "random-gnp")


class SplitMix64:
    """Deterministic 64-bit generator (splitmix64 step function).

    Used for every random graph family so fixtures are reproducible from a
    single documented algorithm:

        state += 0x9E3779B97F4A7C15                     (mod 2^64)
        z = state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9        (mod 2^64)
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB        (mod 2^64)
        output = z ^ (z >> 31)

    Floats are the top 53 bits scaled to [0, 1); randrange(k) reduces the
    64-bit output modulo k.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * (2.0**-53)

    def randrange(self, k: int) -> int:
        if k <= 0:
            raise ValueError("randrange bound must be positive")
        return self.next_u64() % k


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "m", "_adj", "_nsets")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.m = len(seen)
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)
        self._nsets = tuple(frozenset(nb) for nb in self._adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset:
        return self._nsets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nsets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._adj]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def validate(g: Graph) -> None:
    """Re-check the Graph invariants (test support; constructors already enforce them)."""
    assert len(g._adj) == g.n
    for v in range(g.n):
        nb = g.neighbors(v)
        assert list(nb) == sorted(set(nb)), f"unsorted adjacency at {v}"
        assert v not in nb, f"self-loop at {v}"
        for u in nb:
            assert 0 <= u < g.n, f"neighbor {u} out of range"
            assert v in g.neighbor_set(u), f"asymmetric edge ({v},{u})"


# -- named families ----------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path requires n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete requires n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def star(n: int) -> Graph:
    if n < 1:
        raise ValueError("star requires n >= 1")
    return Graph(n, [(0, i) for i in range(1, n)])


def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("empty requires n >= 0")
    return Graph(n)


def random_tree(n: int, seed: int = 0) -> Graph:
    """Random recursive tree: vertex i >= 1 attaches to a uniform vertex < i."""
    if n < 1:
        raise ValueError("random-tree requires n >= 1")
    rng = SplitMix64(seed)
    return Graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_gnp(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p): each pair (u, v) in lexicographic order is an edge when the
    next stream float is < p."""
    if n < 0:
        raise ValueError("random-gnp requires n >= 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError("probability must be in [0, 1]")
    rng = SplitMix64(seed)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.next_float() < p]
    return Graph(n, edges)


def build_named(family: str, n: int, p: float | None = None, seed: int = 0) -> Graph:
    """Build a named-family graph; deterministic for a fixed seed."""
    if family == "path":
        return path(n)
    if family == "cycle":
        return cycle(n)
    if family == "complete":
        return complete(n)
    if family == "star":
        return star(n)
    if family == "empty":
        return empty(n)
    if family == "random-tree":
        return random_tree(n, seed)
    if family == "random-gnp":
        if p is None:
            raise ValueError("random-gnp requires a probability")
        return random_gnp(n, p, seed)
    raise ValueError(f"unknown family {family!r} (expected one of {', '.join(FAMILIES)})")


# -- structural utilities ----------------------------------------------------


@dataclass(frozen=True)
class GraphStats:
    max_degree: int
    min_degree: int
    components: tuple[tuple[int, ...], ...]

    @property
    def component_count(self) -> int:
        return len(self.components)


def stats(g: Graph) -> GraphStats:
    """Max/min degree plus connected components in increasing smallest-member order."""
    degs = g.degrees()
    comps = []
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    frontier.append(u)
        comps.append(tuple(sorted(comp)))
    return GraphStats(
        max_degree=max(degs) if degs else 0,
        min_degree=min(degs) if degs else 0,
        components=tuple(comps),
    )


def remove_isolated(g: Graph) -> tuple[Graph, list[int]]:
    """Drop degree-0 vertices, relabeling the rest 0..n'-1 in original order.

    Returns the reduced graph and the original ids of the removed vertices.
    """
    removed = [v for v in range(g.n) if g.degree(v) == 0]
    kept = [v for v in range(g.n) if g.degree(v) > 0]
    relabel = {v: i for i, v in enumerate(kept)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges()]
    return Graph(len(kept), edges), removed


def induced(g: Graph, vertices) -> Graph:
    """Subgraph induced by a vertex set, relabeled in increasing original order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    relabel = {v: i for i, v in enumerate(vs)}
    keep = set(vs)
    edges = [(relabel[u], relabel[v]) for u, v in g.edges() if u in keep and v in keep]
    return Graph(len(vs), edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G + H with H's vertices offset by |V(G)|."""
    off = g.n
    edges = g.edges() + [(u + off, v + off) for u, v in h.edges()]
    return Graph(g.n + h.n, edges)


def edge_union(g: Graph, h: Graph) -> Graph:
    """Union of edge sets on a shared vertex universe (requires equal orders)."""
    if g.n != h.n:
        raise ValueError(f"edge-union needs equal orders, got {g.n} and {h.n}")
    return Graph(g.n, set(g.edges()) | set(h.edges()))


def combine(mode: str, g: Graph, h: Graph) -> Graph:
    if mode == "disjoint-union":
        return disjoint_union(g, h)
    if mode == "edge-union":
        return edge_union(g, h)
    raise ValueError(f"unknown combine mode {mode!r}")


def isomorphic_small(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for graphs on at most 10 vertices.

    Backtracking over vertex maps with degree pruning; exists for test support
    only, hence the hard cap.
    """
    if g.n > 10 or h.n > 10:
        raise ValueError("isomorphic_small is capped at 10 vertices")
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        gi_nbrs = g.neighbors(i)
        for cand in range(n):
            if used[cand] or h.degree(cand) != g.degree(i):
                continue
            ok = True
            for u in gi_nbrs:
                if u < i and not h.has_edge(mapping[u], cand):
                    ok = False
                    break
            if ok:
                # mapped non-neighbors must stay non-neighbors
                for u in range(i):
                    if u not in gi_nbrs and h.has_edge(mapping[u], cand):
                        ok = False
                        break
            if ok:
                mapping[i] = cand
                used[cand] = True
                if extend(i + 1):
                    return True
                used[cand] = False
                mapping[i] = -1
        return False

    return extend(0)
