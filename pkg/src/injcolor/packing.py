"""Brute-force ground truth for packings and packing partitions.

Everything here works straight from the neighborhood-disjointness
definitions, never through the two-step or square graphs, so these results
are an independent check on the coloring reductions: the minimum number of
open packings partitioning V(G) must equal the injective chromatic number,
and the closed variant must equal the 2-distance chromatic number.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph

PACKING_MODES = ("open", "closed")

_MAX_PACKING_LIMIT = 24
_MIN_PARTITION_LIMIT = 12


@dataclass(frozen=True)
class PartitionCertificate:
    mode: str
    classes: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.classes)


def _check_mode(mode: str) -> None:
    if mode not in PACKING_MODES:
        raise ValueError(f"unknown packing mode {mode!r}")


def _hoods(mode: str, g: Graph) -> list[frozenset]:
    if mode == "open":
        return [g.neighbor_set(v) for v in range(g.n)]
    return [g.neighbor_set(v) | {v} for v in range(g.n)]


def is_packing(mode: str, g: Graph, vertices) -> bool:
    """Pairwise neighborhood disjointness; empty and singleton sets pass."""
    _check_mode(mode)
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    hoods = _hoods(mode, g)
    return all(not (hoods[u] & hoods[v]) for u, v in itertools.combinations(vs, 2))


def _conflict_masks(mode: str, g: Graph) -> list[int]:
    """conflict bit u<->v set when {u, v} can never share a packing."""
    hoods = _hoods(mode, g)
    masks = [0] * g.n
    for u, v in itertools.combinations(range(g.n), 2):
        if hoods[u] & hoods[v]:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    return masks


def max_packing(mode: str, g: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum-cardinality packing with the lexicographically least witness.

    Include-first depth-first search in vertex order visits candidate sets in
    lexicographic order, so the first set of the final maximum size is the
    least one; pruning on |chosen| + |candidates| <= best cannot discard a
    strictly larger set.
    """
    _check_mode(mode)
    if g.n > _MAX_PACKING_LIMIT:
        raise ValueError(f"max_packing is capped at {_MAX_PACKING_LIMIT} vertices")
    conflict = _conflict_masks(mode, g)
    best_size = -1
    best: tuple[int, ...] = ()

    def dfs(chosen: list[int], cand: int) -> None:
        nonlocal best_size, best
        if not cand:
            if len(chosen) > best_size:
                best_size = len(chosen)
                best = tuple(chosen)
            return
        if len(chosen) + cand.bit_count() <= best_size:
            return
        v = (cand & -cand).bit_length() - 1
        chosen.append(v)
        dfs(chosen, cand & ~conflict[v] & ~((1 << (v + 1)) - 1))
        chosen.pop()
        dfs(chosen, cand & ~(1 << v))

    dfs([], (1 << g.n) - 1 if g.n else 0)
    return best_size, best


def min_partition(mode: str, g: Graph) -> PartitionCertificate:
    """Exact minimum partition of V(G) into packings, by exhaustive backtracking.

    Vertices are placed in degree-descending order into the first compatible
    class or a single fresh class; branches with at least as many classes as
    the incumbent are cut.  Classes in the certificate are normalized by
    smallest member.
    """
    _check_mode(mode)
    if g.n > _MIN_PARTITION_LIMIT:
        raise ValueError(f"min_partition is capped at {_MIN_PARTITION_LIMIT} vertices")
    n = g.n
    if n == 0:
        return PartitionCertificate(mode=mode, classes=())
    conflict = _conflict_masks(mode, g)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))

    # greedy first-fit incumbent
    greedy: list[tuple[int, list[int]]] = []  # (member mask, members)
    for v in order:
        for i, (mask, members) in enumerate(greedy):
            if not conflict[v] & mask:
                greedy[i] = (mask | (1 << v), members + [v])
                break
        else:
            greedy.append((1 << v, [v]))
    best = [members for _, members in greedy]

    masks = [0] * n
    classes: list[list[int]] = []

    def place(i: int) -> None:
        nonlocal best
        if len(classes) >= len(best):
            return
        if i == n:
            best = [c.copy() for c in classes]
            return
        v = order[i]
        bit = 1 << v
        for ci in range(len(classes)):
            if not conflict[v] & masks[ci]:
                classes[ci].append(v)
                masks[ci] |= bit
                place(i + 1)
                masks[ci] &= ~bit
                classes[ci].pop()
        if len(classes) + 1 < len(best):
            classes.append([v])
            masks[len(classes) - 1] = bit
            place(i + 1)
            masks[len(classes) - 1] = 0
            classes.pop()

    place(0)
    normalized = tuple(sorted((tuple(sorted(c)) for c in best), key=lambda c: c[0]))
    return PartitionCertificate(mode=mode, classes=normalized)
