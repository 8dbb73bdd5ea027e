"""Graph products: Cartesian, direct, strong, lexicographic, and corona.

The four standard products share the row-major vertex codec
(g, h) -> g*|V(H)| + h, so a product vertex id decodes as divmod(id, |V(H)|).
The corona G (.) H places G's vertices first, then one contiguous block per
copy of H: copy i occupies |V(G)| + i*|V(H)| .. |V(G)| + (i+1)*|V(H)| - 1.
"""

from __future__ import annotations

from .graph import Graph

PRODUCT_KINDS = ("cartesian", "direct", "strong", "lexicographic", "corona")


def pair_index(h_order: int, g: int, h: int) -> int:
    """Row-major codec for the standard products."""
    return g * h_order + h


def _check_standard(g: Graph, h: Graph) -> None:
    if g.n == 0 or h.n == 0:
        raise ValueError("standard products require nonempty factors")


def cartesian(g: Graph, h: Graph) -> Graph:
    """Adjacent in one coordinate, equal in the other."""
    _check_standard(g, h)
    edges = []
    for a in range(g.n):
        for u, v in h.edges():
            edges.append((pair_index(h.n, a, u), pair_index(h.n, a, v)))
    for u, v in g.edges():
        for b in range(h.n):
            edges.append((pair_index(h.n, u, b), pair_index(h.n, v, b)))
    return Graph(g.n * h.n, edges)


def direct(g: Graph, h: Graph) -> Graph:
    """Adjacent in both coordinates (tensor product)."""
    _check_standard(g, h)
    edges = set()
    for u, v in g.edges():
        for a, b in h.edges():
            edges.add(_norm(pair_index(h.n, u, a), pair_index(h.n, v, b)))
            edges.add(_norm(pair_index(h.n, u, b), pair_index(h.n, v, a)))
    return Graph(g.n * h.n, edges)


def strong(g: Graph, h: Graph) -> Graph:
    """Union of the Cartesian and direct edge sets."""
    _check_standard(g, h)
    edges = set(cartesian(g, h).edges()) | set(direct(g, h).edges())
    return Graph(g.n * h.n, edges)


def lexicographic(g: Graph, h: Graph) -> Graph:
    """(g,h) ~ (g',h') iff gg' is an edge of G, or g = g' and hh' is an edge of H."""
    _check_standard(g, h)
    edges = []
    for a in range(g.n):
        for u, v in h.edges():
            edges.append((pair_index(h.n, a, u), pair_index(h.n, a, v)))
    for u, v in g.edges():
        for a in range(h.n):
            for b in range(h.n):
                edges.append((pair_index(h.n, u, a), pair_index(h.n, v, b)))
    return Graph(g.n * h.n, edges)


def corona(g: Graph, h: Graph) -> Graph:
    """One copy of H per vertex of G, each copy fully joined to its base vertex."""
    if g.n < 1:
        raise ValueError("corona requires a nonempty first factor")
    edges = list(g.edges())
    for i in range(g.n):
        base = g.n + i * h.n
        for u, v in h.edges():
            edges.append((base + u, base + v))
        for u in range(h.n):
            edges.append((i, base + u))
    return Graph(g.n + g.n * h.n, edges)


def product(kind: str, g: Graph, h: Graph) -> Graph:
    if kind == "cartesian":
        return cartesian(g, h)
    if kind == "direct":
        return direct(g, h)
    if kind == "strong":
        return strong(g, h)
    if kind == "lexicographic":
        return lexicographic(g, h)
    if kind == "corona":
        return corona(g, h)
    raise ValueError(f"unknown product kind {kind!r} (expected one of {', '.join(PRODUCT_KINDS)})")


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)
