"""Exact classical invariants: clique number, independence, girth, chromatic
number, subgraph containment, and a small canonical-form routine.

Everything here is exhaustive search over bitset rows.  Desk scale means
roughly n <= 80 for the dense coloring instances; the searches accept a
cooperative :class:`~ctl.graph.Budget` and either finish exactly or raise
:class:`~ctl.graph.BudgetExceeded` / return an explicit unknown result.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .graph import Budget, BudgetExceeded, Graph, iter_bits

_FREE = Budget(None)


# -- connectivity / cycles ---------------------------------------------------


def connected_components(g: Graph) -> List[int]:
    """Vertex masks of connected components, ordered by smallest vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen & (1 << v):
            continue
        frontier = 1 << v
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
        comps.append(comp)
        seen |= comp
    return comps


def is_forest(g: Graph) -> bool:
    comps = connected_components(g)
    return g.edge_count() == g.n - len(comps)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def bipartition(g: Graph) -> Optional[Tuple[int, int]]:
    """Two-coloring as (mask0, mask1), or None if an odd cycle exists."""
    color: Dict[int, int] = {}
    for s in range(g.n):
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.rows[v]):
                if u not in color:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    m0 = m1 = 0
    for v, c in color.items():
        if c == 0:
            m0 |= 1 << v
        else:
            m1 |= 1 << v
    return m0, m1


def girth(g: Graph) -> float:
    """Length of a shortest cycle; math.inf for forests.

    Per-vertex BFS: the shortest cycle through the BFS root is detected when
    an edge closes between two reached vertices via distinct root branches.
    """
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] >= best:
                break
            for u in iter_bits(g.rows[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    cycle = dist[v] + dist[u] + 1
                    if cycle < best:
                        best = cycle
    return best


# -- cliques and independent sets -------------------------------------------


def _clique_color_bound(rows: Sequence[int], cand: int) -> int:
    """Greedy proper-coloring class count of the subgraph on ``cand``:
    an upper bound on the largest clique inside it."""
    classes = 0
    rest = cand
    while rest:
        classes += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            bit = 1 << v
            rest &= ~bit
            avail &= ~(rows[v] | bit)
    return classes


def max_clique(
    g: Graph, cap: Optional[int] = None, budget: Optional[Budget] = None
) -> Tuple[int, int]:
    """Exact maximum clique as (size, vertex mask).

    With ``cap`` the search exits early once a clique of that size is found,
    which is all a K_r-freeness test needs.
    """
    budget = budget or _FREE
    rows = g.rows
    best_size = 0
    best_mask = 0

    def expand(cur_mask: int, cur_size: int, cand: int) -> bool:
        nonlocal best_size, best_mask
        budget.tick()
        if cur_size > best_size:
            best_size, best_mask = cur_size, cur_mask
            if cap is not None and best_size >= cap:
                return True
        if not cand:
            return False
        if cur_size + _clique_color_bound(rows, cand) <= best_size:
            return False
        v = (cand & -cand).bit_length() - 1
        # branch: include v, then exclude v
        if expand(cur_mask | (1 << v), cur_size + 1, cand & rows[v]):
            return True
        return expand(cur_mask, cur_size, cand & ~(1 << v))

    expand(0, 0, g.full_mask())
    return best_size, best_mask


def clique_number(g: Graph, cap: Optional[int] = None, budget: Optional[Budget] = None) -> int:
    size, _ = max_clique(g, cap=cap, budget=budget)
    return min(size, cap) if cap is not None else size


def max_weight_independent_set(
    g: Graph, weights: Sequence[int], budget: Optional[Budget] = None
) -> Tuple[int, int]:
    """Exact maximum-weight independent set as (weight, vertex mask).

    Weights are nonnegative integers (rational callers scale through the
    common denominator first).  Branch and bound with weight-sum pruning.
    """
    budget = budget or _FREE
    rows = g.rows
    w = list(weights)
    if len(w) != g.n:
        raise ValueError("weight vector length mismatch")
    best_w = 0
    best_mask = 0
    # branching order: heavy vertices first
    order = sorted(range(g.n), key=lambda v: -w[v])

    def total(mask: int) -> int:
        return sum(w[v] for v in iter_bits(mask))

    def rec(cand: int, cur_w: int, cur_mask: int, remaining: int) -> None:
        nonlocal best_w, best_mask
        budget.tick()
        if cur_w > best_w:
            best_w, best_mask = cur_w, cur_mask
        if not cand or cur_w + remaining <= best_w:
            return
        for v in order:
            if cand & (1 << v):
                break
        else:  # pragma: no cover - cand nonempty
            return
        bit = 1 << v
        closed = (rows[v] & cand) | bit
        rec(cand & ~closed, cur_w + w[v], cur_mask | bit, remaining - total(closed))
        if w[v] == 0:
            return  # zero-weight exclusion can never help
        rec(cand & ~bit, cur_w, cur_mask, remaining - w[v])

    rec(g.full_mask(), 0, 0, total(g.full_mask()))
    return best_w, best_mask


def maximum_independent_set(g: Graph, budget: Optional[Budget] = None) -> int:
    """Vertex mask of one maximum independent set."""
    _, mask = max_weight_independent_set(g, [1] * g.n, budget=budget)
    return mask


def independence_number(g: Graph, budget: Optional[Budget] = None) -> int:
    w, _ = max_weight_independent_set(g, [1] * g.n, budget=budget)
    return w


# -- chromatic number ---------------------------------------------------------


@dataclass(frozen=True)
class ChiResult:
    """Outcome of the exact coloring search.

    ``value`` is None when the node budget ran out between ``lower`` and
    ``upper``; a returned value is always exact and ``coloring`` is a witness.
    """

    value: Optional[int]
    coloring: Optional[Tuple[int, ...]]
    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.value is not None


def greedy_coloring(g: Graph) -> List[int]:
    """DSATUR greedy proper coloring (upper-bound witness)."""
    n = g.n
    color = [-1] * n
    if n == 0:
        return color
    sat_mask = [0] * n
    uncolored = set(range(n))
    while uncolored:
        v = max(
            uncolored,
            key=lambda x: (sat_mask[x].bit_count(), g.rows[x].bit_count(), -x),
        )
        c = 0
        while sat_mask[v] & (1 << c):
            c += 1
        color[v] = c
        for u in iter_bits(g.rows[v]):
            sat_mask[u] |= 1 << c
        uncolored.remove(v)
    return color


def _k_colorable(g: Graph, k: int, clique_mask: int, budget: Budget) -> Optional[List[int]]:
    """Backtracking k-colorability with the clique precolored.

    DSATUR-style most-constrained-vertex selection, forward checking, and the
    standard fresh-color symmetry break (a vertex may open at most the first
    unused color index).
    """
    n = g.n
    if k <= 0:
        return [] if n == 0 else None
    color = [-1] * n
    forbidden = [0] * n  # bitmask over k colors
    kfull = (1 << k) - 1
    clique = list(iter_bits(clique_mask))
    if len(clique) > k:
        return None
    for i, v in enumerate(clique):
        color[v] = i
        for u in iter_bits(g.rows[v]):
            forbidden[u] |= 1 << i
    used = len(clique)
    uncolored = [v for v in range(n) if color[v] < 0]
    for v in uncolored:
        if forbidden[v] & kfull == kfull:
            return None

    def choose() -> int:
        best_v = -1
        best_key = None
        for v in uncolored:
            if color[v] >= 0:
                continue
            avail = kfull & ~forbidden[v]
            key = (avail.bit_count(), -g.rows[v].bit_count())
            if best_key is None or key < best_key:
                best_key = key
                best_v = v
                if key[0] == 0:
                    break
        return best_v

    def assign(v: int, c: int) -> List[int]:
        changed = []
        color[v] = c
        bit = 1 << c
        for u in iter_bits(g.rows[v]):
            if color[u] < 0 and not forbidden[u] & bit:
                forbidden[u] |= bit
                changed.append(u)
        return changed

    def undo(v: int, c: int, changed: List[int]) -> None:
        color[v] = -1
        bit = 1 << c
        for u in changed:
            forbidden[u] &= ~bit

    def solve(remaining: int, used_colors: int) -> bool:
        budget.tick()
        if remaining == 0:
            return True
        v = choose()
        if v < 0:
            return True
        avail = kfull & ~forbidden[v]
        if not avail:
            return False
        limit = min(used_colors + 1, k)  # one fresh color at most
        for c in range(limit):
            bit = 1 << c
            if not avail & bit:
                continue
            changed = assign(v, c)
            # forward check
            dead = False
            for u in iter_bits(g.rows[v]):
                if color[u] < 0 and forbidden[u] & kfull == kfull:
                    dead = True
                    break
            if not dead and solve(remaining - 1, max(used_colors, c + 1)):
                return True
            undo(v, c, changed)
        return False

    ok = solve(len(uncolored), used)
    return color if ok else None


def chromatic_number(g: Graph, budget: Optional[Budget] = None) -> ChiResult:
    """Exact chromatic number with a witness coloring.

    Branch and bound between the exact clique lower bound and the DSATUR
    upper bound; on budget exhaustion returns an unknown-within-bounds
    result instead of guessing.
    """
    budget = budget or _FREE
    if g.n == 0:
        return ChiResult(0, (), 0, 0)
    if g.edge_count() == 0:
        return ChiResult(1, tuple([0] * g.n), 1, 1)
    two = bipartition(g)
    if two is not None:
        coloring = [0] * g.n
        for v in iter_bits(two[1]):
            coloring[v] = 1
        return ChiResult(2, tuple(coloring), 2, 2)
    greedy = greedy_coloring(g)
    upper = max(greedy) + 1
    best = list(greedy)
    try:
        lower, clique_mask = max_clique(g, budget=budget)
    except BudgetExceeded:
        return ChiResult(None, None, 3, upper)
    lower = max(lower, 3)
    k = lower
    try:
        while k < upper:
            witness = _k_colorable(g, k, clique_mask, budget)
            if witness is not None:
                best = witness
                upper = k
                break
            k += 1
    except BudgetExceeded:
        return ChiResult(None, None, k, upper)
    return ChiResult(upper, tuple(best), upper, upper)


def chi(g: Graph, budget: Optional[Budget] = None) -> int:
    """Chromatic number as a plain int; raises if the budget ran out."""
    res = chromatic_number(g, budget=budget)
    if res.value is None:
        raise BudgetExceeded(f"chromatic number undecided in [{res.lower}, {res.upper}]")
    return res.value


def is_proper_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges())


# -- subgraph containment -----------------------------------------------------


def subgraph_contains(
    g: Graph, h: Graph, budget: Optional[Budget] = None
) -> Optional[Tuple[int, ...]]:
    """Injective map V(h) -> V(g) preserving edges (not necessarily induced).

    Returns the injection as a tuple indexed by h's vertices, or None after an
    exhaustive search.  Backtracking over h in a connectivity-first order with
    degree pruning.
    """
    budget = budget or _FREE
    if h.n == 0:
        return ()
    if h.n > g.n:
        return None
    hdeg = [h.degree(v) for v in range(h.n)]
    # order: repeatedly take the vertex with most already-ordered neighbors,
    # ties by degree (highest first)
    order: List[int] = []
    placed = set()
    while len(order) < h.n:
        best_v, best_key = -1, None
        for v in range(h.n):
            if v in placed:
                continue
            back = sum(1 for u in iter_bits(h.rows[v]) if u in placed)
            key = (back, hdeg[v])
            if best_key is None or key > best_key:
                best_key, best_v = key, v
        order.append(best_v)
        placed.add(best_v)
    pos = {v: i for i, v in enumerate(order)}
    gdeg = [g.degree(v) for v in range(g.n)]
    assign = [-1] * h.n
    used = 0

    def rec(i: int) -> bool:
        nonlocal used
        budget.tick()
        if i == len(order):
            return True
        hv = order[i]
        cand = g.full_mask() & ~used
        for hu in iter_bits(h.rows[hv]):
            if assign[hu] >= 0:
                cand &= g.rows[assign[hu]]
        for gv in iter_bits(cand):
            if gdeg[gv] < hdeg[hv]:
                continue
            assign[hv] = gv
            used |= 1 << gv
            if rec(i + 1):
                return True
            used &= ~(1 << gv)
            assign[hv] = -1
        return False

    if rec(0):
        return tuple(assign)
    return None


# -- canonical forms ----------------------------------------------------------


def _refine(n: int, rows: Sequence[int], colors: List[int]) -> List[int]:
    """1-dimensional Weisfeiler-Leman color refinement to a stable partition."""
    while True:
        sig = []
        for v in range(n):
            neigh = sorted(colors[u] for u in iter_bits(rows[v]))
            sig.append((colors[v], tuple(neigh)))
        ranking = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranking[s] for s in sig]
        if new == colors:
            return new
        colors = new


def canonical_form(g: Graph) -> bytes:
    """Canonical adjacency bytes via refinement + individualization.

    Intended for the small graphs this package deduplicates (decomposition
    family members, trees): exponential in the worst case, fine at desk scale.
    """
    n = g.n
    if n == 0:
        return b""
    rows = g.rows
    best: Optional[bytes] = None

    def perm_form(perm: Sequence[int]) -> bytes:
        # perm[i] = original vertex placed at position i
        inv = [0] * n
        for i, v in enumerate(perm):
            inv[v] = i
        out = bytearray()
        acc = 0
        nbits = 0
        for i in range(n):
            ri = rows[perm[i]]
            for j in range(i):
                acc = (acc << 1) | (1 if ri & (1 << perm[j]) else 0)
                nbits += 1
                if nbits == 8:
                    out.append(acc)
                    acc = nbits = 0
        if nbits:
            out.append(acc << (8 - nbits))
        return bytes(out)

    def rec(colors: List[int]) -> None:
        nonlocal best
        colors = _refine(n, rows, colors)
        cells: Dict[int, List[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        ordered = [cells[c] for c in sorted(cells)]
        target = next((cell for cell in ordered if len(cell) > 1), None)
        if target is None:
            perm = [cell[0] for cell in ordered]
            form = perm_form(perm)
            if best is None or form < best:
                best = form
            return
        mark = max(colors) + 1
        for v in target:
            child = list(colors)
            child[v] = mark
            rec(child)

    rec([0] * n)
    assert best is not None
    return bytes([n]) + best


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g) == canonical_form(h)
