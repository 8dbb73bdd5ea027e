"""Coloring verification and exact chromatic numbers.

verify() checks a candidate coloring in one of three modes: proper (no
monochromatic edge), injective (no vertex sees the same color twice in its
open neighborhood) and two-distance (vertices at distance <= 2 differ).

exact_chromatic() is a DSATUR branch-and-bound: a maximum clique seeds the
lower bound and pre-colors the search, one-pass DSATUR gives the upper bound,
and k-colorability is decided for k = lb, lb+1, ... by backtracking with
saturation-first vertex selection.  Tie-breaking is fully specified
(saturation desc, degree desc, id asc; colors tried ascending; a single fresh
color per branch level), so witnesses are reproducible fixtures.

chi() wraps the injective and two-distance problems as proper colorings of
the two-step graph and the square, respectively.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .errors import BudgetExceededError
from .graph import Graph, SplitMix64, induced, stats
from .transforms import square, two_step

COLORING_MODES = ("proper", "injective", "two-distance")

DEFAULT_BUDGET = 60.0

_EXACT_CLIQUE_LIMIT = 200
_INDEPENDENCE_LIMIT = 20
_TIMER_STRIDE = 2048


# -- verification -------------------------------------------------------------


def _check_coloring(g: Graph, colors) -> None:
    if len(colors) != g.n:
        raise ValueError(f"coloring has {len(colors)} entries for {g.n} vertices")
    for c in colors:
        if c < 1:
            raise ValueError("colors are 1-based positive integers")


def verify(mode: str, g: Graph, colors) -> tuple[bool, tuple | None]:
    """Check a coloring; on failure return the first violation in lex order.

    Violations: proper and two-distance report a vertex pair (u, v); injective
    reports (v, u, w) where vertex v sees the color of u again on w.
    """
    _check_coloring(g, colors)
    if mode == "proper":
        for u, v in g.edges():
            if colors[u] == colors[v]:
                return False, (u, v)
        return True, None
    if mode == "injective":
        for v in range(g.n):
            for u, w in itertools.combinations(g.neighbors(v), 2):
                if colors[u] == colors[w]:
                    return False, (v, u, w)
        return True, None
    if mode == "two-distance":
        sq = square(g)
        for u, v in sq.edges():
            if colors[u] == colors[v]:
                return False, (u, v)
        return True, None
    raise ValueError(f"unknown coloring mode {mode!r}")


def colors_used(colors) -> int:
    return len(set(colors))


# -- bounds --------------------------------------------------------------------


@dataclass(frozen=True)
class Bounds:
    clique_lower: int
    greedy_upper: int
    independence: int | None = None


def _neighbor_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _max_clique_masks(masks: list[int], deadline: float | None = None) -> list[int]:
    """Exact maximum clique, branch and bound with a greedy coloring bound.

    Candidates at each node are greedily colored; a vertex whose color class
    index plus the current clique size cannot beat the incumbent prunes the
    rest of the (color-sorted) candidate list.
    """
    n = len(masks)
    order = sorted(range(n), key=lambda v: (-bin(masks[v]).count("1"), v))
    best: list[int] = []
    ticker = itertools.count()

    def expand(r: list[int], cand: int) -> None:
        nonlocal best
        if deadline is not None and next(ticker) % _TIMER_STRIDE == 0:
            if time.monotonic() > deadline:
                raise BudgetExceededError(len(best), n)
        if cand == 0:
            if len(r) > len(best):
                best = r.copy()
            return
        # greedy coloring of the candidate set, classes built in vertex order;
        # candidates are then branched in decreasing color order, which is
        # what makes the |r| + color cutoff below prune soundly
        classes: list[int] = []
        colored: list[tuple[int, int]] = []
        for v in order:
            if not (cand >> v) & 1:
                continue
            for ci, cmask in enumerate(classes):
                if cmask & masks[v] == 0:
                    classes[ci] |= 1 << v
                    colored.append((v, ci + 1))
                    break
            else:
                classes.append(1 << v)
                colored.append((v, len(classes)))
        colored.sort(key=lambda vc: vc[1])
        for v, color in reversed(colored):
            if len(r) + color <= len(best):
                return
            r.append(v)
            expand(r, cand & masks[v])
            r.pop()
            cand &= ~(1 << v)

    expand([], (1 << n) - 1 if n else 0)
    return sorted(best)


def _greedy_clique(masks: list[int]) -> list[int]:
    n = len(masks)
    clique: list[int] = []
    cand = (1 << n) - 1 if n else 0
    while cand:
        best_v, best_deg = -1, -1
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(masks[v] & cand).count("1")
            if d > best_deg:
                best_v, best_deg = v, d
        clique.append(best_v)
        cand &= masks[best_v]
    return sorted(clique)


def dsatur_greedy(g: Graph) -> tuple[int, list[int]]:
    """One-pass DSATUR; returns (color count, 1-based coloring)."""
    n = g.n
    colors = [0] * n
    ncmask = [0] * n
    degs = g.degrees()
    for _ in range(n):
        best, key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            k = (bin(ncmask[v]).count("1"), degs[v], -v)
            if key is None or k > key:
                best, key = v, k
        c = 1
        while (ncmask[best] >> (c - 1)) & 1:
            c += 1
        colors[best] = c
        for u in g.neighbors(best):
            if not colors[u]:
                ncmask[u] |= 1 << (c - 1)
    return (max(colors) if n else 0), colors


def _tabu_k_coloring(
    g: Graph,
    k: int,
    seed: int = 0x7AB0,
    max_moves: int | None = None,
    deadline: float | None = None,
) -> list[int] | None:
    """Deterministic tabu search for a k-coloring (upper-bound improver).

    Classic one-move scheme: start from a DSATUR assignment truncated to k
    colors, then repeatedly recolor a conflicted vertex, minimizing the
    conflict count, with a short tabu tenure on reversals.  All tie-breaks and
    the occasional plateau kick come from a seeded splitmix stream, so runs
    are reproducible.  Returns a valid coloring or None; never used to prove
    infeasibility.
    """
    n = g.n
    if k <= 0:
        return None if n else []
    rng = SplitMix64(seed + 0x9E37 * k)
    _, start = dsatur_greedy(g)
    colors = [c if c <= k else rng.randrange(k) + 1 for c in start]
    # conflict table: gamma[v][c] = neighbors of v currently colored c
    gamma = [[0] * (k + 1) for _ in range(n)]
    for u, v in g.edges():
        gamma[u][colors[v]] += 1
        gamma[v][colors[u]] += 1
    conflicts = sum(gamma[v][colors[v]] for v in range(n)) // 2
    if conflicts == 0:
        return colors
    tabu = [[0] * (k + 1) for _ in range(n)]
    if max_moves is None:
        max_moves = max(6_000, 120 * n)
    stagnation_cut = 1_500 + 20 * n
    best_conf = conflicts
    last_improvement = 0
    for step in range(1, max_moves + 1):
        if deadline is not None and step % _TIMER_STRIDE == 0 and time.monotonic() > deadline:
            return None
        best_move, best_delta = None, None
        for v in range(n):
            gv = gamma[v]
            cv = colors[v]
            if gv[cv] == 0:
                continue
            for c in range(1, k + 1):
                if c == cv:
                    continue
                delta = gv[c] - gv[cv]
                if tabu[v][c] >= step and conflicts + delta > 0:
                    continue
                if best_delta is None or delta < best_delta:
                    best_move, best_delta = (v, c), delta
        if best_move is None:
            # every move is tabu: deterministic kick on a conflicted vertex
            conflicted = [v for v in range(n) if gamma[v][colors[v]] > 0]
            v = conflicted[rng.randrange(len(conflicted))]
            c = rng.randrange(k) + 1
            if c == colors[v]:
                c = c % k + 1
            best_move, best_delta = (v, c), gamma[v][c] - gamma[v][colors[v]]
        v, c = best_move
        old = colors[v]
        colors[v] = c
        conflicts += best_delta
        tabu[v][old] = step + 7 + rng.randrange(1 + conflicts)
        for u in g.neighbors(v):
            gamma[u][old] -= 1
            gamma[u][c] += 1
        if conflicts < best_conf:
            best_conf = conflicts
            last_improvement = step
        if conflicts == 0:
            return colors
        if step - last_improvement > stagnation_cut:
            return None
    return None


def bounds(g: Graph, *, with_independence: bool = False) -> Bounds:
    """Clique lower bound, DSATUR greedy upper bound, optional exact independence."""
    masks = _neighbor_masks(g)
    if g.n <= _EXACT_CLIQUE_LIMIT:
        clique = _max_clique_masks(masks)
    else:
        clique = _greedy_clique(masks)
    upper, _ = dsatur_greedy(g)
    alpha = None
    if with_independence:
        if g.n > _INDEPENDENCE_LIMIT:
            raise ValueError(
                f"independence in bounds() is capped at {_INDEPENDENCE_LIMIT} vertices"
            )
        alpha = independence_number(g)
    lower = max(len(clique), 1 if g.n else 0)
    return Bounds(clique_lower=lower, greedy_upper=max(upper, lower), independence=alpha)


_INDEPENDENCE_EXACT_LIMIT = 100


def independence_number(g: Graph, deadline: float | None = None) -> int:
    """Exact independence number via maximum clique of the complement."""
    if g.n > _INDEPENDENCE_EXACT_LIMIT:
        raise ValueError(
            f"independence_number is capped at {_INDEPENDENCE_EXACT_LIMIT} vertices"
        )
    full = (1 << g.n) - 1
    nbr = _neighbor_masks(g)
    comp = [full & ~nbr[v] & ~(1 << v) for v in range(g.n)]
    return len(_max_clique_masks(comp, deadline))


# -- exact chromatic number ----------------------------------------------------


class _SearchTimeout(Exception):
    pass


_SUCCESS = None  # sentinel conflict set meaning "coloring completed"


def _k_colorable(adj: list, k: int, deadline: float | None) -> list[int] | None:
    """Find a k-coloring or prove there is none.

    Vertices of degree below k are peeled off first (they can always be
    colored afterwards, greedily in reverse removal order), so only the
    high-degree core is searched.  On dense instances with many weakly
    constrained vertices the core collapses to a fraction of the graph; on
    regular instances peeling is a no-op.
    """
    n = len(adj)
    deg = [len(a) for a in adj]
    alive = [True] * n
    removal: list[int] = []
    stack = [v for v in range(n) if deg[v] < k]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        removal.append(v)
        for u in adj[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] == k - 1:
                    stack.append(u)
    colors = [0] * n
    core = [v for v in range(n) if alive[v]]
    if core:
        index = {v: i for i, v in enumerate(core)}
        cadj = [tuple(index[u] for u in adj[v] if alive[u]) for v in core]
        cmasks = [0] * len(core)
        for i, nbrs in enumerate(cadj):
            for j in nbrs:
                cmasks[i] |= 1 << j
        if len(core) <= _EXACT_CLIQUE_LIMIT:
            clique = _max_clique_masks(cmasks, deadline)
        else:
            clique = _greedy_clique(cmasks)
        core_colors = _search_k_coloring(cadj, k, clique, deadline)
        if core_colors is None:
            return None
        for i, v in enumerate(core):
            colors[v] = core_colors[i]
    for v in reversed(removal):
        taken = {colors[u] for u in adj[v] if colors[u]}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def _search_k_coloring(
    adj: list,
    k: int,
    clique: list[int],
    deadline: float | None,
) -> list[int] | None:
    """Exhaustive k-coloring search on a core graph.

    The clique is pre-colored 1..|clique| (any k-coloring can be permuted to
    agree, so this loses no solutions).  At each node the most saturated
    uncolored vertex is chosen and colors are tried ascending, allowing at
    most one color never used before.

    Backtracking is conflict-directed: a failed subtree reports the set of
    assigned vertices actually responsible, and decisions not in that set are
    jumped over.  This matters for refutations whose cause lives in a small
    subgraph of a large instance.  The fresh-color cap is a global symmetry
    rule, so any failure that touched it falls back to a plain chronological
    step (conflict set "everything assigned"), which keeps the jump sound.

    Vertices with equal closed neighborhoods (adjacent twins) are fully
    interchangeable, so their colors are forced into increasing id order;
    without this, clique-like modules multiply the search by the number of
    within-module permutations.
    """
    n = len(adj)
    degs = [len(a) for a in adj]
    if len(clique) > k:
        return None
    # chains of adjacent twins: predecessor/successor in id order
    twin_groups: dict[frozenset, list[int]] = {}
    for v in range(n):
        twin_groups.setdefault(frozenset(adj[v]) | {v}, []).append(v)
    twin_pred = [-1] * n
    twin_succ = [-1] * n
    for group in twin_groups.values():
        for a, b in zip(group, group[1:]):
            twin_succ[a] = b
            twin_pred[b] = a
    colors = [0] * n
    ncmask = [0] * n
    # counts[v][c]: assigned neighbors of v currently holding color c; the
    # ncmask bit for c is set exactly while the count is positive
    counts = [[0] * (k + 1) for _ in range(n)]
    stamp = [0] * n  # assignment order, for picking the earliest culprit
    ticker = itertools.count()

    def assign(v: int, c: int, tick: int) -> None:
        colors[v] = c
        stamp[v] = tick
        bit = 1 << (c - 1)
        for u in adj[v]:
            if not colors[u]:
                cu = counts[u]
                cu[c] += 1
                if cu[c] == 1:
                    ncmask[u] |= bit

    def unassign(v: int) -> None:
        c = colors[v]
        bit = 1 << (c - 1)
        for u in adj[v]:
            if not colors[u]:
                cu = counts[u]
                cu[c] -= 1
                if cu[c] == 0:
                    ncmask[u] &= ~bit
        colors[v] = 0

    for i, v in enumerate(clique):
        assign(v, i + 1, i + 1)

    def culprit(v: int, c: int) -> int:
        best = -1
        for u in adj[v]:
            if colors[u] == c and (best == -1 or stamp[u] < stamp[best]):
                best = u
        return best

    def solve(done: int, used: int, tick: int) -> frozenset | None:
        """Return _SUCCESS or the conflict set of this subtree."""
        if done == n:
            return _SUCCESS
        if deadline is not None and next(ticker) % _TIMER_STRIDE == 0:
            if time.monotonic() > deadline:
                raise _SearchTimeout
        best, key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            kk = (ncmask[v].bit_count(), degs[v], -v)
            if key is None or kk > key:
                best, key = v, kk
        v = best
        limit = min(k, used + 1)
        capped = limit < k
        conflict = {culprit(v, c) for c in range(1, limit + 1) if (ncmask[v] >> (c - 1)) & 1}
        conflict.discard(-1)
        avail = ~ncmask[v] & ((1 << limit) - 1)
        pred, succ = twin_pred[v], twin_succ[v]
        if pred != -1 and colors[pred]:
            avail &= ~((1 << colors[pred]) - 1)  # strictly above the twin before v
            conflict.add(pred)
        if succ != -1 and colors[succ]:
            avail &= (1 << (colors[succ] - 1)) - 1  # strictly below the twin after v
            conflict.add(succ)
        while avail:
            bit = avail & -avail
            avail &= avail - 1
            c = bit.bit_length()
            assign(v, c, tick)
            sub = solve(done + 1, max(used, c), tick + 1)
            if sub is _SUCCESS:
                return _SUCCESS
            unassign(v)
            if v not in sub:
                return sub  # this decision was irrelevant: jump over it
            conflict |= sub - {v}
        if capped:
            return frozenset(u for u in range(n) if colors[u])
        return frozenset(conflict)

    if solve(len(clique), len(clique), len(clique) + 1) is _SUCCESS:
        return colors
    return None


def _solve_component(g: Graph, deadline: float | None) -> tuple[int, list[int], int, int]:
    """Exact chromatic number of one connected graph.

    Returns (chi, witness, proven_lower, upper); raises _SearchTimeout with no
    partial result, so callers track the interval themselves via bounds().
    """
    masks = _neighbor_masks(g)
    if g.n <= _EXACT_CLIQUE_LIMIT:
        clique = _max_clique_masks(masks, deadline)
    else:
        clique = _greedy_clique(masks)
    ub, best_witness = dsatur_greedy(g)
    lb = max(len(clique), 1)
    # shrink the upper bound by local search first: constructing near-optimal
    # colorings is the expensive half for the backtracking search, while
    # refutations below chi are cheap, so a good heuristic witness usually
    # leaves the exact loop a single refutation; tiny graphs go straight to
    # the exact search
    while g.n >= 24 and ub > lb:
        improved = _tabu_k_coloring(g, ub - 1, deadline=deadline)
        if improved is None:
            break
        ub, best_witness = ub - 1, improved
    if ub > lb and g.n <= _INDEPENDENCE_EXACT_LIMIT:
        # counting bound chi >= n / alpha, often tight exactly where the
        # clique bound is weakest; best-effort within a short time slice
        slice_end = time.monotonic() + 10.0
        try:
            alpha = independence_number(
                g, slice_end if deadline is None else min(deadline, slice_end)
            )
            lb = max(lb, -(-g.n // alpha))
        except BudgetExceededError:
            pass
    adj = [g.neighbors(v) for v in range(g.n)]
    # exact descent: each round either lowers the upper bound with a found
    # coloring or proves k = ub - 1 impossible, pinning chi = ub
    while ub > lb:
        witness = _k_colorable(adj, ub - 1, deadline)
        if witness is None:
            break
        ub, best_witness = len(set(witness)), witness
    return ub, best_witness, ub, ub


def exact_chromatic(g: Graph, budget: float | None = DEFAULT_BUDGET) -> tuple[int, list[int]]:
    """Exact chi(G) with a proper-coloring witness.

    Components are solved independently and the results combined with a
    maximum, reusing color names across components.  Isolated vertices get
    color 1 up front.  Exceeding the budget raises BudgetExceededError
    carrying the proven [lb, ub] interval; it is never silently approximate.
    """
    if g.n == 0:
        return 0, []
    deadline = time.monotonic() + budget if budget is not None else None
    comps = stats(g).components
    witness = [1] * g.n
    chi_val = 1
    proven_lb = 1
    solved_ub = 1
    # identical components (frequent in two-step graphs of products) share one solve
    cache: dict[tuple[int, tuple[tuple[int, int], ...]], tuple[int, list[int]]] = {}
    pending = [comp for comp in comps if len(comp) > 1]
    for idx, comp in enumerate(pending):
        sub = induced(g, comp)
        key = (sub.n, tuple(sub.edges()))
        try:
            if key in cache:
                value, sub_witness = cache[key]
            else:
                value, sub_witness, _, _ = _solve_component(sub, deadline)
                cache[key] = (value, sub_witness)
        except (_SearchTimeout, BudgetExceededError):
            remaining = pending[idx:]
            ub = solved_ub
            lb = proven_lb
            for rest in remaining:
                rsub = induced(g, rest)
                b = Bounds(
                    clique_lower=len(_greedy_clique(_neighbor_masks(rsub))),
                    greedy_upper=dsatur_greedy(rsub)[0],
                )
                lb = max(lb, b.clique_lower)
                ub = max(ub, b.greedy_upper)
            raise BudgetExceededError(lb, ub) from None
        for local, v in enumerate(sorted(comp)):
            witness[v] = sub_witness[local]
        chi_val = max(chi_val, value)
        proven_lb = max(proven_lb, value)
        solved_ub = max(solved_ub, value)
    return chi_val, witness


def chi(mode: str, g: Graph, budget: float | None = DEFAULT_BUDGET) -> tuple[int, list[int]]:
    """Chromatic value for a mode, with a witness on V(G) that verify() accepts.

    injective reduces to a proper coloring of the two-step graph, two-distance
    to a proper coloring of the square; proper is exact_chromatic itself.
    """
    if mode == "proper":
        return exact_chromatic(g, budget)
    if mode == "injective":
        return exact_chromatic(two_step(g), budget)
    if mode == "two-distance":
        return exact_chromatic(square(g), budget)
    raise ValueError(f"unknown coloring mode {mode!r}")
