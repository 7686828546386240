"""Builders for the extremal graph families used throughout the toolkit.

Every constructor attaches vertex labels that preserve combinatorial
identity (which m-subset a Kneser vertex is, which block of A a Hajnal
vertex sits in, ...).  Labels are plain strings; downstream modules that
need the identity (canonical partitions, identity Kneser labelings) parse
them back.

Label prefixes used here:
  Kneser / shift vertices          "1,3,5"          (1-based sorted tuple)
  Hajnal Kneser part               "K:1,3,5"
  Hajnal A blocks / B side         "A3:7" / "B:2"   (block:index)
  join clique classes              "J1:4"
  multipartite parts               "P0:2"
  shift-graph isolated padding     "iso:0"
  Zykov trees / hubs / full sets   "T1:0:0" / "S{1,3}:0" / "W1:0"
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence, Tuple

from .graph import (
    Graph,
    ParameterError,
    VertexCapExceeded,
    blowup,
    disjoint_union,
    graph_from_edges,
    join,
)
from .invariants import bipartition, girth, is_forest

DEFAULT_VERTEX_CAP = 5000


def _check_cap(n: int, cap: Optional[int]) -> None:
    limit = DEFAULT_VERTEX_CAP if cap is None else cap
    if n > limit:
        raise VertexCapExceeded(f"construction needs {n} vertices, cap is {limit}")


# -- elementary families ------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return graph_from_edges(n, [])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(sizes: Sequence[int], cap: Optional[int] = None) -> Graph:
    """Complete multipartite graph; the Turan graph is the balanced case."""
    if not sizes or any(s < 0 for s in sizes):
        raise ParameterError("part sizes must be a nonempty list of nonnegative ints")
    n = sum(sizes)
    _check_cap(n, cap)
    labels = []
    part_of = []
    for p, s in enumerate(sizes):
        for i in range(s):
            labels.append(f"P{p}:{i}")
            part_of.append(p)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    return graph_from_edges(n, edges, labels)


def turan_graph(n: int, r: int) -> Graph:
    """Complete balanced r-partite graph on n vertices."""
    if r < 1:
        raise ParameterError("Turan graph needs r >= 1")
    base, extra = divmod(n, r)
    sizes = [base + 1] * extra + [base] * (r - extra)
    return complete_multipartite(sizes)


# -- Kneser and shift graphs --------------------------------------------------


def kneser(n: int, m: int, cap: Optional[int] = None) -> Graph:
    """Kneser graph KN(n, m): m-subsets of [n], adjacent iff disjoint."""
    if m < 1 or n < 1:
        raise ParameterError("kneser needs n >= 1 and m >= 1")
    _check_cap(comb(n, m), cap)
    verts = list(combinations(range(1, n + 1), m))
    masks = [sum(1 << (x - 1) for x in s) for s in verts]
    edges = [
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if not masks[i] & masks[j]
    ]
    labels = [",".join(map(str, s)) for s in verts]
    return graph_from_edges(len(verts), edges, labels)


def shift_graph(m: int, k: int, cap: Optional[int] = None) -> Graph:
    """Shift graph on increasing k-tuples of [m]; x ~ y iff one shifts into
    the other (x_i = y_{i+1} for all i, or vice versa)."""
    if not m > k >= 2:
        raise ParameterError("shift graph needs m > k >= 2")
    _check_cap(comb(m, k), cap)
    verts = list(combinations(range(1, m + 1), k))
    index = {t: i for i, t in enumerate(verts)}
    edges = []
    for t in verts:
        # y = (a, t_1, ..., t_{k-1}) for a < t_1 shifts into t
        for a in range(1, t[0]):
            edges.append((index[(a,) + t[:-1]], index[t]))
    labels = [",".join(map(str, t)) for t in verts]
    return graph_from_edges(len(verts), edges, labels)


# -- Hajnal graphs -------------------------------------------------------------


@dataclass(frozen=True)
class HajnalParams:
    """Parameters of the Hajnal graph: Kneser part KN(2m+k, m) wired into the
    2l-side of a complete bipartite K_{2l,l}.  Requires (2m+k) | l."""

    k: int
    l: int
    m: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.l < 1 or self.m < 1:
            raise ParameterError("Hajnal parameters must be positive")
        if self.l % (2 * self.m + self.k) != 0:
            raise ParameterError(
                f"(2m+k)={2 * self.m + self.k} must divide l={self.l}"
            )

    @property
    def ground(self) -> int:
        return 2 * self.m + self.k

    @property
    def triangle_free_expected(self) -> bool:
        # k < m keeps the Kneser-to-A wiring triangle-free at small scale
        return self.k < self.m


def hajnal(p: HajnalParams, cap: Optional[int] = None) -> Graph:
    """Hajnal graph H(k, l, m) on C(2m+k, m) + 3l vertices.

    Kneser vertex S gains an edge to every vertex of block A_j exactly when
    j is an element of S, so each S sees m|A|/(2m+k) vertices of A.
    """
    g = p.ground
    kn = comb(g, p.m)
    n = kn + 3 * p.l
    _check_cap(n, cap)
    sets = list(combinations(range(1, g + 1), p.m))
    masks = [sum(1 << (x - 1) for x in s) for s in sets]
    a_start = kn
    b_start = kn + 2 * p.l
    block = 2 * p.l // g  # |A_j|
    labels = [f"K:{','.join(map(str, s))}" for s in sets]
    labels += [f"A{j + 1}:{i}" for j in range(g) for i in range(block)]
    labels += [f"B:{i}" for i in range(p.l)]
    edges = []
    for i in range(kn):
        for j in range(i + 1, kn):
            if not masks[i] & masks[j]:
                edges.append((i, j))
    for a in range(2 * p.l):
        for b in range(p.l):
            edges.append((a_start + a, b_start + b))
    for i, s in enumerate(sets):
        for j in s:  # 1-based block ids
            base = a_start + (j - 1) * block
            edges.extend((i, base + t) for t in range(block))
    return graph_from_edges(n, edges, labels)


def r_hajnal(r: int, p: HajnalParams, cap: Optional[int] = None) -> Graph:
    """r-Hajnal graph: the Hajnal graph joined with a 2l-blowup of K_{r-3}.

    r = 3 is the Hajnal graph itself.  The join classes are labeled J1..J_{r-3}.
    """
    if r < 3:
        raise ParameterError("r-Hajnal graph needs r >= 3")
    base = hajnal(p, cap=cap)
    if r == 3:
        return base
    _check_cap(base.n + (r - 3) * 2 * p.l, cap)
    clique_part = blowup(complete_graph(r - 3), 2 * p.l)
    labels = [f"J{v // (2 * p.l) + 1}:{v % (2 * p.l)}" for v in range(clique_part.n)]
    clique_part = clique_part.relabel(labels)
    return join(base, clique_part)


# -- VC lower-bound construction ----------------------------------------------


def vc_lower_bound_graph(r: int, m: int, n: int, cap: Optional[int] = None) -> Graph:
    """Shift graph plus isolated padding, joined with a blown-up K_{r-3}.

    The core G' is the disjoint union of the shift graph on pairs from [m]
    and n/(r-2) - C(m,2) isolated vertices; the result joins G' with
    K_{r-3}[|G'|].  K_r-free with minimum degree >= (r-3)/(r-2) * n.
    """
    if r < 4:
        raise ParameterError("vc lower-bound construction needs r >= 4")
    if n % (r - 2) != 0:
        raise ParameterError(f"n={n} must be divisible by r-2={r - 2}")
    core = n // (r - 2)
    pairs = comb(m, 2)
    if core < pairs:
        raise ParameterError(
            f"n/(r-2)={core} must be at least C(m,2)={pairs} to fit the shift graph"
        )
    _check_cap(n, cap)
    sh = shift_graph(m, 2)
    pad = empty_graph(core - pairs).relabel([f"iso:{i}" for i in range(core - pairs)])
    gprime = disjoint_union(sh, pad)
    clique_part = blowup(complete_graph(r - 3), core)
    labels = [f"J{v // core + 1}:{v % core}" for v in range(clique_part.n)]
    return join(gprime, clique_part.relabel(labels))


# -- modified Zykov graphs ------------------------------------------------------


@dataclass(frozen=True)
class ZykovSpec:
    """Recipe for a modified Zykov graph.

    ``trees`` lists vertex-disjoint trees as (n, edges) with a designated
    bipartition; hubs indexed by subsets of the tree list are blown up to
    size ``t``, plus r-3 fully joined blown-up vertices.
    """

    r: int
    t: int
    trees: Tuple[Graph, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.r < 3:
            raise ParameterError("Zykov graph needs r >= 3")
        if self.t < 1:
            raise ParameterError("Zykov blowup factor must be >= 1")
        for tr in self.trees:
            if tr.n == 0 or not is_forest(tr):
                raise ParameterError("Zykov tree components must be nonempty trees")
            from .invariants import is_connected

            if not is_connected(tr):
                raise ParameterError("Zykov tree components must be connected")

    @property
    def ell(self) -> int:
        return len(self.trees)


def zykov(spec: ZykovSpec, cap: Optional[int] = None) -> Graph:
    """Modified Zykov graph: universal container for r-near-acyclic graphs.

    Layout: tree vertices first (per tree), then hub sets S_I for every
    I subset of [ell] in subset-mask order, then the r-3 fully joined sets.
    Hub set S_I is complete to side 0 of tree j when j is in I and to side 1
    otherwise; the W sets are complete to everything else.
    """
    ell = spec.ell
    n_tree = sum(tr.n for tr in spec.trees)
    n = n_tree + (1 << ell) * spec.t + (spec.r - 3) * spec.t
    _check_cap(n, cap)
    labels: List[str] = []
    edges: List[Tuple[int, int]] = []
    sides: List[Tuple[int, int]] = []  # per tree: global masks of (side0, side1)
    offset = 0
    for j, tr in enumerate(spec.trees, start=1):
        parts = bipartition(tr)
        assert parts is not None  # trees are bipartite
        side0 = sum(1 << (offset + v) for v in range(tr.n) if parts[0] >> v & 1)
        side1 = sum(1 << (offset + v) for v in range(tr.n) if parts[1] >> v & 1)
        sides.append((side0, side1))
        for u, v in tr.edges():
            edges.append((offset + u, offset + v))
        for v in range(tr.n):
            side = 0 if parts[0] >> v & 1 else 1
            labels.append(f"T{j}:{v}:{side}")
        offset += tr.n
    hub_start = offset
    for imask in range(1 << ell):
        subset = ",".join(str(j + 1) for j in range(ell) if imask >> j & 1)
        for c in range(spec.t):
            labels.append(f"S{{{subset}}}:{c}")
    w_start = hub_start + (1 << ell) * spec.t
    for j in range(1, spec.r - 2):
        for c in range(spec.t):
            labels.append(f"W{j}:{c}")
    # hub edges: S_I complete to tree sides selected by I
    from .graph import iter_bits

    for imask in range(1 << ell):
        base = hub_start + imask * spec.t
        for j in range(ell):
            target = sides[j][0] if imask >> j & 1 else sides[j][1]
            for c in range(spec.t):
                edges.extend((base + c, v) for v in iter_bits(target))
    # W sets: complete to everything outside their own blowup class
    for j in range(spec.r - 3):
        base = w_start + j * spec.t
        for c in range(spec.t):
            w = base + c
            for v in range(n):
                if v < base or v >= base + spec.t:
                    if v < w:
                        edges.append((v, w))
    return graph_from_edges(n, edges, labels, allow_duplicates=True)


# -- Erdos-graph predicate -------------------------------------------------------


def is_erdos_graph(g: Graph, k: Fraction, ell: int) -> bool:
    """True iff the fractional chromatic number is at least k and the girth is
    at least ell.  Predicate only; building large such graphs is out of scope."""
    if girth(g) < ell:
        return False
    from .fractional import fractional_chromatic

    return fractional_chromatic(g).value >= k
