"""Immutable simple graphs on bitset adjacency rows, with graph6 and edge-list I/O.

Vertices are 0..n-1.  Each adjacency row is a Python int used as a bit
vector, so neighborhood intersections in the search routines are single
big-int AND operations.  Graphs are frozen after construction and safe to
share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple


class CtlError(Exception):
    """Base class for errors raised by this package."""


class FormatError(CtlError):
    """Malformed graph input (bad header, loop, duplicate edge, bad byte)."""


class ParameterError(CtlError):
    """Construction or operation called with infeasible parameters."""


class VertexCapExceeded(ParameterError):
    """A constructor would produce more vertices than the configured cap."""


class BudgetExceeded(CtlError):
    """A search exhausted its cooperative node budget."""


class Budget:
    """Cooperative cancellation token: counts search nodes, raises on overrun."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: Optional[int] = None) -> None:
        self.limit = limit
        self.used = 0

    def tick(self, k: int = 1) -> None:
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"search budget of {self.limit} nodes exhausted")

    def spent(self) -> int:
        return self.used


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``n`` vertices, symmetric bit rows, no loops.

    ``labels`` are opaque identity strings attached by constructors (e.g. the
    m-subset a Kneser vertex stands for); nothing in this module interprets
    them.
    """

    n: int
    rows: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.rows) != self.n:
            raise FormatError("row count does not match vertex count")
        if self.labels is not None and len(self.labels) != self.n:
            raise FormatError("label count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row >> self.n:
                raise FormatError(f"adjacency row {v} addresses out-of-range vertices")
            if row & (1 << v):
                raise FormatError(f"self-loop at vertex {v}")
            if row & ~full:
                raise FormatError(f"adjacency row {v} out of range")
        # symmetry
        for v, row in enumerate(self.rows):
            for u in iter_bits(row):
                if not self.rows[u] & (1 << v):
                    raise FormatError(f"asymmetric adjacency between {u} and {v}")

    # -- basic accessors -------------------------------------------------

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] & (1 << v))

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.rows[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.rows[v])

    # -- derived graphs --------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex i of the result is vertices[i]."""
        verts = list(vertices)
        index = {v: i for i, v in enumerate(verts)}
        if len(index) != len(verts):
            raise ParameterError("duplicate vertices in induced-subgraph request")
        rows = []
        for v in verts:
            row = 0
            for u in iter_bits(self.rows[v]):
                j = index.get(u)
                if j is not None:
                    row |= 1 << j
            rows.append(row)
        labels = tuple(self.label(v) for v in verts) if self.labels is not None else None
        return Graph(len(verts), tuple(rows), labels)

    def induced_mask(self, mask: int) -> "Graph":
        return self.induced(list(iter_bits(mask)))

    def complement(self) -> "Graph":
        full = self.full_mask()
        rows = tuple((full & ~self.rows[v]) & ~(1 << v) for v in range(self.n))
        return Graph(self.n, rows, self.labels)

    def relabel(self, labels: Sequence[str]) -> "Graph":
        return Graph(self.n, self.rows, tuple(labels))


def graph_from_edges(
    n: int,
    edges: Iterable[Tuple[int, int]],
    labels: Optional[Sequence[str]] = None,
    allow_duplicates: bool = False,
) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex index out of range in edge ({u}, {v})")
        if u == v:
            raise FormatError(f"loop at vertex {u}")
        if rows[u] & (1 << v) and not allow_duplicates:
            raise FormatError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), tuple(labels) if labels is not None else None)


# -- spec'd operations on graphs ------------------------------------------


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus all edges between them."""
    n = g.n + h.n
    shift = g.n
    hmask = ((1 << h.n) - 1) << shift
    gmask = (1 << g.n) - 1
    rows = [g.rows[v] | hmask for v in range(g.n)]
    rows += [(h.rows[v] << shift) | gmask for v in range(h.n)]
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(g.label(v) for v in range(g.n)) + tuple(h.label(v) for v in range(h.n))
    return Graph(n, tuple(rows), labels)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    rows = list(g.rows) + [h.rows[v] << shift for v in range(h.n)]
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(g.label(v) for v in range(g.n)) + tuple(h.label(v) for v in range(h.n))
    return Graph(g.n + h.n, tuple(rows), labels)


def blowup(g: Graph, s: int) -> Graph:
    """Replace each vertex by an independent set of size s, edges by complete
    bipartite graphs.  s = 1 returns an equal graph with the same labels."""
    if s < 1:
        raise ParameterError("blowup factor must be >= 1")
    if s == 1:
        return g
    n = g.n * s
    rows = []
    labels = [] if g.labels is not None else None
    block = (1 << s) - 1
    expanded = []
    for v in range(g.n):
        row = 0
        for u in iter_bits(g.rows[v]):
            row |= block << (u * s)
        expanded.append(row)
    for v in range(g.n):
        for i in range(s):
            rows.append(expanded[v])
            if labels is not None:
                labels.append(f"{g.label(v)}#{i}")
    return Graph(n, tuple(rows), tuple(labels) if labels is not None else None)


# -- edge-list format -------------------------------------------------------
# First line: n.  Then one "u v" per line, 0-based.  '#' starts a comment.


def parse_edge_list(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 1 or not head[0].isdigit():
        raise FormatError(f"malformed header line {lines[0]!r}: expected vertex count")
    n = int(head[0])
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"malformed edge line {line!r}") from exc
        edges.append((u, v))
    return graph_from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    out = [str(g.n)]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


# -- graph6 format ----------------------------------------------------------
# Standard 6-bit encoding: short size form for n < 63, 4-byte form for
# 63 <= n < 258048.  Upper triangle packed column-wise.


def _g6_encode_size(n: int) -> str:
    if n < 0:
        raise FormatError("negative vertex count")
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> (6 * k)) & 63) + 63) for k in (2, 1, 0))
    raise FormatError("graph too large for supported graph6 size forms")


def _g6_decode_size(data: str) -> Tuple[int, int]:
    """Return (n, index of first payload char)."""
    if not data:
        raise FormatError("empty graph6 input")
    c = ord(data[0])
    if c == 126:
        if len(data) >= 2 and ord(data[1]) == 126:
            raise FormatError("graph6 long-long size form not supported")
        if len(data) < 4:
            raise FormatError("truncated graph6 size field")
        vals = [ord(ch) - 63 for ch in data[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise FormatError("invalid byte in graph6 size field")
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    if not 63 <= c <= 125:
        raise FormatError(f"invalid graph6 size byte {data[0]!r}")
    return c - 63, 1


def to_graph6(g: Graph) -> str:
    bits = []
    for v in range(1, g.n):
        col = g.rows[v]
        for u in range(v):
            bits.append(1 if col & (1 << u) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _g6_encode_size(g.n) + "".join(chars)


def parse_graph6(data: str) -> Graph:
    data = data.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<") :]
    n, pos = _g6_decode_size(data)
    need = (n * (n - 1) // 2 + 5) // 6
    payload = data[pos:]
    if len(payload) != need:
        raise FormatError(
            f"graph6 payload length {len(payload)} does not match n={n} (expected {need})"
        )
    bits = []
    for ch in payload:
        c = ord(ch) - 63
        if c < 0 or c > 63:
            raise FormatError(f"invalid graph6 payload byte {ch!r}")
        bits.extend((c >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return Graph(n, tuple(rows))


def parse_graph(data: str | bytes, fmt: Optional[str] = None) -> Graph:
    """Parse ``data`` in the declared format, or sniff edge-list vs graph6.

    Edge-list inputs start with a decimal vertex count on its own line (or a
    '#' comment); anything else is treated as graph6.
    """
    if isinstance(data, bytes):
        data = data.decode("ascii")
    if fmt == "graph6":
        return parse_graph6(data)
    if fmt == "edge-list":
        return parse_edge_list(data)
    if fmt is not None:
        raise ParameterError(f"unknown graph format {fmt!r}")
    stripped = data.strip()
    first = stripped.splitlines()[0].split("#", 1)[0].strip() if stripped else ""
    if first.isdigit() and (first != stripped or " " not in stripped):
        # lone number or number followed by edge lines
        return parse_edge_list(data)
    return parse_graph6(data)


def serialize_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edge-list":
        return to_edge_list(g)
    raise ParameterError(f"unknown graph format {fmt!r}")
