"""Periodic coloring grids for cyclic products and the colorings derived from them.

A PatternGrid is a rows x cols matrix of 1-based colors together with a
target descriptor naming the cyclic product it colors (row cycle length 2
means K2).  realize() maps a grid onto the product graph through the
row-major codec, so grids double as portable coloring fixtures.

five_coloring_strong() assembles 5-colorings of C_{2k} (x) C_n for odd
n >= 5 out of the width-5 and width-4 building blocks: widths 5, 7, 9, 11
have fixed layouts, larger odd widths are concatenations found through the
coin-problem decomposition 5a + 4b = n, trying block orders until the
verifier accepts.  Nothing composed is ever trusted unverified.

direct_cycle_coloring() transports these grids to injective colorings of
direct products of cycles: each cycle factor's two-step graph splits into
isomorphic cycle components, a vertex's component position is computed from
the index doubling, and one verified grid colors every component pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CompositionError
from .formulas import chi_i_direct_cycles, sylvester
from .graph import Graph, complete, cycle
from .products import direct, lexicographic, strong
from .solver import verify

BUILTIN_NAMES = ("A", "B", "C", "D", "PAT11", "PAT44", "CE")


@dataclass(frozen=True)
class GridTarget:
    product: str  # "strong" | "lexicographic"
    row_cycle: int
    col_cycle: int
    mode: str  # coloring mode the grid is declared to satisfy

    def to_dict(self) -> dict:
        return {
            "product": self.product,
            "row_cycle": self.row_cycle,
            "col_cycle": self.col_cycle,
            "mode": self.mode,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GridTarget":
        return cls(d["product"], int(d["row_cycle"]), int(d["col_cycle"]), d["mode"])


@dataclass(frozen=True)
class PatternGrid:
    cells: tuple[tuple[int, ...], ...]
    target: GridTarget | None = None

    def __post_init__(self):
        if not self.cells or not self.cells[0]:
            raise ValueError("grid must be nonempty")
        width = len(self.cells[0])
        if any(len(row) != width for row in self.cells):
            raise ValueError("grid rows must have equal length")
        if any(c < 1 for row in self.cells for c in row):
            raise ValueError("grid colors are 1-based positive integers")
        if self.target is not None:
            if self.rows != self.target.row_cycle or self.cols != self.target.col_cycle:
                raise ValueError("grid shape must match the target cycle lengths")

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    def colors_used(self) -> int:
        return len({c for row in self.cells for c in row})

    def to_dict(self) -> dict:
        d: dict = {"rows": self.rows, "cols": self.cols, "cells": [list(r) for r in self.cells]}
        if self.target is not None:
            d["target"] = self.target.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "PatternGrid":
        cells = tuple(tuple(int(c) for c in row) for row in d["cells"])
        target = GridTarget.from_dict(d["target"]) if d.get("target") else None
        return cls(cells=cells, target=target)


def _rows(*rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r) for r in rows)


# the four band patterns, row cycle 4; widths 5, 4, 7 and 11
_A = _rows((1, 2, 3, 4, 5), (3, 4, 5, 1, 2), (5, 1, 2, 3, 4), (3, 4, 5, 1, 2))
_B = _rows((4, 5, 4, 5), (1, 2, 1, 2), (3, 4, 3, 4), (1, 2, 1, 2))
_C = _rows(*(a + b[:2] for a, b in zip(_A, _B)))
_D = _rows(*(a + b[:2] * 3 for a, b in zip(_A, _B)))

# the 7 x 5 two-distance coloring of the lexicographic product of C7 and C5
# that beats the 4 * 5 = 20 color product bound with 18 colors
_CE = _rows(
    (1, 5, 8, 12, 15),
    (2, 6, 9, 13, 16),
    (3, 7, 10, 14, 17),
    (1, 4, 8, 11, 15),
    (2, 5, 9, 12, 16),
    (3, 6, 10, 13, 17),
    (4, 7, 11, 14, 18),
)


def _strong_target(rows: int, cols: int, mode: str = "proper") -> GridTarget:
    return GridTarget(product="strong", row_cycle=rows, col_cycle=cols, mode=mode)


def _alternating_triple_grid(k: int) -> tuple[tuple[int, ...], ...]:
    """3 x 2k grid alternating columns (1,2,3) and (4,5,6)."""
    return tuple(
        tuple(a + 3 * (j % 2) for j in range(2 * k)) for a in (1, 2, 3)
    )


def _tile_2x2_grid(rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    """The [[1,2],[3,4]] block tiled over an even rows x even cols torus."""
    return tuple(
        tuple(2 * (i % 2) + (j % 2) + 1 for j in range(cols)) for i in range(rows)
    )


def builtin(
    name: str, k: int | None = None, s: int | None = None, t: int | None = None
) -> PatternGrid:
    """One of the named grids: A, B, C, D, PAT11(k), PAT44(s, t), CE."""
    if name == "A":
        return PatternGrid(_A, _strong_target(4, 5))
    if name == "B":
        return PatternGrid(_B, _strong_target(4, 4))
    if name == "C":
        return PatternGrid(_C, _strong_target(4, 7))
    if name == "D":
        return PatternGrid(_D, _strong_target(4, 11))
    if name == "PAT11":
        if k is None or k < 2:
            raise ValueError("PAT11 requires k >= 2")
        return PatternGrid(_alternating_triple_grid(k), _strong_target(3, 2 * k))
    if name == "PAT44":
        if s is None or t is None or s < 1 or t < 1:
            raise ValueError("PAT44 requires s, t >= 1")
        return PatternGrid(_tile_2x2_grid(2 * s, 2 * t), _strong_target(2 * s, 2 * t))
    if name == "CE":
        return PatternGrid(
            _CE,
            GridTarget(product="lexicographic", row_cycle=7, col_cycle=5, mode="two-distance"),
        )
    raise ValueError(f"unknown pattern name {name!r} (expected one of {', '.join(BUILTIN_NAMES)})")


def _cycle_or_k2(length: int) -> Graph:
    if length == 2:
        return complete(2)
    return cycle(length)


def realize(grid: PatternGrid) -> tuple[Graph, list[int]]:
    """Build the target product graph and the coloring the grid encodes."""
    if grid.target is None:
        raise ValueError("grid has no target to realize")
    row_g = _cycle_or_k2(grid.target.row_cycle)
    col_g = _cycle_or_k2(grid.target.col_cycle)
    if grid.target.product == "strong":
        graph = strong(row_g, col_g)
    elif grid.target.product == "lexicographic":
        graph = lexicographic(row_g, col_g)
    else:
        raise ValueError(f"unsupported target product {grid.target.product!r}")
    colors = [grid.cells[i][j] for i in range(grid.rows) for j in range(grid.cols)]
    return graph, colors


def _grid_verifies(cells: tuple[tuple[int, ...], ...], rows: int, cols: int) -> bool:
    grid = PatternGrid(cells, _strong_target(rows, cols))
    graph, colors = realize(grid)
    return verify("proper", graph, colors)[0]


def _distinct_orders(alpha: int, beta: int):
    """All distinct arrangements of alpha A-blocks and beta B-blocks, lexicographic."""
    seen = set()
    for perm in itertools.permutations("A" * alpha + "B" * beta):
        if perm not in seen:
            seen.add(perm)
            yield perm


def _base_band(n: int) -> tuple[tuple[int, ...], ...]:
    """A verified 4-row band of width n (odd n >= 5) using at most 5 colors."""
    if n == 5:
        return _A
    if n == 7:
        return _C
    if n == 9:
        return _rows(*(a + b for a, b in zip(_A, _B)))
    if n == 11:
        return _D
    member, least = sylvester(5, 4, n)
    if not member:
        raise CompositionError(f"width {n} is not decomposable into 5s and 4s")
    blocks = {"A": _A, "B": _B}
    decompositions = [least] + [
        (a, (n - 5 * a) // 4)
        for a in range(n // 5 + 1)
        if (n - 5 * a) % 4 == 0 and (a, (n - 5 * a) // 4) != least
    ]
    for alpha, beta in decompositions:
        for order in _distinct_orders(alpha, beta):
            cells = _rows(
                *(tuple(itertools.chain.from_iterable(blocks[b][r] for b in order)) for r in range(4))
            )
            if _grid_verifies(cells, 4, n):
                return cells
    raise CompositionError(f"no block arrangement yields a valid width-{n} band")


def five_coloring_strong(k: int, n: int) -> PatternGrid:
    """A verified 5-coloring grid for the strong product of C_{2k} and C_n.

    The width-n band (4 rows) is tiled vertically: row cycle 4j stacks j
    copies, row cycle 4j+2 stacks j copies and appends the band's first two
    rows (k = 1 keeps just those two rows, the row cycle degenerating to K2).
    """
    if k < 1:
        raise ValueError("row half-length k must be >= 1")
    if n < 5 or n % 2 == 0:
        raise ValueError("column cycle length must be odd and >= 5")
    band = _base_band(n)
    rows_needed = 2 * k
    stack: list[tuple[int, ...]] = []
    for _ in range(rows_needed // 4):
        stack.extend(band)
    if rows_needed % 4:
        stack.extend(band[:2])
    grid = PatternGrid(_rows(*stack), _strong_target(rows_needed, n))
    graph, colors = realize(grid)
    ok, violation = verify("proper", graph, colors)
    if not ok:
        raise CompositionError(f"assembled {rows_needed}x{n} grid fails verification at {violation}")
    return grid


# -- injective colorings of direct products of cycles --------------------------


def _triangle_arc_grid(q: int) -> tuple[tuple[int, ...], ...]:
    """Optimal coloring grid for the strong product of a triangle and C_q (odd q).

    Column j receives the color triple {x_j, x_j+1, x_j+2} modulo
    N = 6 + ceil(3/t) with q = 2t+1: consecutive columns get disjoint arcs,
    which is exactly what the product's column cliques require.  Steps of 3
    with a tail of 4s make the offsets close up around the cycle.
    """
    t = (q - 1) // 2
    palette = 6 + -(-3 // t)  # 6 + ceil(3/t)
    big_steps = (-3 * q) % palette
    offsets = [0]
    for j in range(q - 1):
        step = 4 if j >= q - 1 - big_steps else 3
        offsets.append((offsets[-1] + step) % palette)
    return tuple(
        tuple((offsets[j] + a) % palette + 1 for j in range(q)) for a in range(3)
    )


def _odd_walk(length: int) -> list[int]:
    """A closed walk of the given odd length >= 5 through the 5-cycle 0..4."""
    walk = [0, 1, 2, 3, 4]
    for i in range((length - 5) // 2):
        walk.extend((0, 1))
    return walk


def _odd_odd_grid(p: int, q: int) -> tuple[tuple[int, ...], ...]:
    """5-coloring grid for the strong product of two odd cycles, lengths >= 5.

    Both cycles wind onto a 5-cycle by a closed walk (around once, then
    zigzagging on one edge), and the diagonal coloring a + 2b (mod 5) of the
    strong product of two 5-cycles pulls back along the winding.
    """
    wp, wq = _odd_walk(p), _odd_walk(q)
    return tuple(
        tuple((wp[i] + 2 * wq[j]) % 5 + 1 for j in range(q)) for i in range(p)
    )


def _transpose(cells: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(zip(*cells))


def _component_pair_grid(la: int, lb: int) -> tuple[tuple[int, ...], ...]:
    """Optimal proper-coloring grid for the strong product of two cycle shapes.

    la x lb cells; length 2 stands for K2.  Dispatches to the tile, band,
    triangle-arc and double-winding constructions; the caller verifies.
    """
    a_odd, b_odd = la % 2 == 1, lb % 2 == 1
    if not a_odd and not b_odd:
        return _tile_2x2_grid(la, lb)
    if not a_odd and b_odd:
        if lb == 3:
            return _transpose(_alternating_triple_grid(la // 2))
        return five_coloring_strong(la // 2, lb).cells
    if a_odd and not b_odd:
        return _transpose(_component_pair_grid(lb, la))
    # both odd
    if la == 3:
        return _triangle_arc_grid(lb)
    if lb == 3:
        return _transpose(_triangle_arc_grid(la))
    return _odd_odd_grid(la, lb)


def _cycle_positions(m: int) -> tuple[int, list[int]]:
    """Component length and per-vertex position within the two-step of C_m.

    Odd m: a single cycle visited by doubling, position = g * (m+1)/2 mod m.
    Even m: one cycle per parity class, position = g // 2, length m/2 (length
    2 meaning K2).
    """
    if m % 2 == 1:
        inv2 = (m + 1) // 2
        return m, [(g * inv2) % m for g in range(m)]
    return m // 2, [g // 2 for g in range(m)]


def direct_cycle_coloring(m: int, n: int) -> tuple[Graph, list[int]]:
    """An explicit optimal injective coloring of the direct product C_m x C_n.

    The two-step graph of the product has the same edges as the strong
    product of the factors' two-step graphs, whose components are all pairs
    of factor components; one grid colors every pair (disjoint components
    reuse colors, which is why the count is a max over pairs, not a sum).
    The result is verified and its color count checked against the closed
    formula before returning.
    """
    if m < 3 or n < 3:
        raise ValueError("cycle lengths must be >= 3")
    la, pos_m = _cycle_positions(m)
    lb, pos_n = _cycle_positions(n)
    grid = _component_pair_grid(la, lb)
    graph = direct(cycle(m), cycle(n))
    colors = [grid[pos_m[g]][pos_n[h]] for g in range(m) for h in range(n)]
    expected = chi_i_direct_cycles(m, n).value
    ok, violation = verify("injective", graph, colors)
    if not ok:
        raise CompositionError(
            f"direct cycle coloring for ({m}, {n}) fails verification at {violation}"
        )
    used = len(set(colors))
    if used != expected:
        raise CompositionError(
            f"direct cycle coloring for ({m}, {n}) uses {used} colors, formula says {expected}"
        )
    return graph, colors
