"""Immutable simple undirected graphs with neighborhood queries and graph6 / edge-list I/O.

Vertices are dense 0-based ids.  Candidate sets everywhere in this package are
plain ``frozenset``/``set`` objects over those ids (the ``VertexSet`` alias).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import ParseError

VertexSet = frozenset[int]

GRAPH6_HEADER = ">>graph6<<"

# graph6 payload bytes live in [63, 126]: chr(63 + six-bit group).
_G6_MIN = 63
_G6_MAX = 126


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus per-vertex neighbor sets.

    Instances are immutable after construction; neighborhood caches are safe
    to share across concurrent readers.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list, rejecting loops and duplicates."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @cached_property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    @cached_property
    def closed_adj(self) -> tuple[frozenset[int], ...]:
        """Per-vertex closed neighborhoods N[v]."""
        return tuple(self.adj[v] | {v} for v in range(self.n))

    @cached_property
    def second_lists(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted lists of vertices at distance exactly 2."""
        out = []
        for v in range(self.n):
            reach: set[int] = set()
            for u in self.adj[v]:
                reach |= self.adj[u]
            reach -= self.closed_adj[v]
            out.append(tuple(sorted(reach)))
        return tuple(out)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex id {v} out of range for n={self.n}")


def neighbors(g: Graph, v: int) -> VertexSet:
    """Open neighborhood: all vertices adjacent to v."""
    g._check_vertex(v)
    return g.adj[v]


def closed_neighbors(g: Graph, v: int) -> VertexSet:
    """Closed neighborhood: v together with its neighbors."""
    g._check_vertex(v)
    return g.closed_adj[v]


def second_neighborhood(g: Graph, v: int) -> VertexSet:
    """Vertices at graph distance exactly 2 from v (not distance <= 2)."""
    g._check_vertex(v)
    return frozenset(g.second_lists[v])


def is_regular(g: Graph) -> int | None:
    """Return the common degree if every vertex has it, else None."""
    if g.n == 0:
        raise ValueError("regularity is undefined for the empty graph")
    r = len(g.adj[0])
    for nbrs in g.adj:
        if len(nbrs) != r:
            return None
    return r


def is_connected(g: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches every vertex."""
    if g.n == 0:
        raise ValueError("connectivity is undefined for the empty graph")
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


# graph6: byte = 63 + 6-bit group; upper adjacency triangle column-major,
# i.e. bits (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional '>>graph6<<' header allowed)."""
    stripped = text.strip()
    base = text.index(stripped) if stripped else 0
    if stripped.startswith(GRAPH6_HEADER):
        base += len(GRAPH6_HEADER)
        stripped = stripped[len(GRAPH6_HEADER):]
    try:
        data = stripped.encode("ascii")
    except UnicodeEncodeError as exc:
        raise ParseError("non-ASCII byte in graph6 input", offset=base + exc.start) from None
    if not data:
        raise ParseError("empty graph6 input", offset=base)

    def group(i: int) -> int:
        if i >= len(data):
            raise ParseError("truncated graph6 input", offset=base + len(data))
        b = data[i]
        if not _G6_MIN <= b <= _G6_MAX:
            raise ParseError(f"invalid graph6 byte {b}", offset=base + i)
        return b - _G6_MIN

    pos = 0
    if data[0] == 126:  # long-form vertex count
        if len(data) > 1 and data[1] == 126:
            parts = [group(i) for i in range(2, 8)]
            pos = 8
        else:
            parts = [group(i) for i in range(1, 4)]
            pos = 4
        n = 0
        for p in parts:
            n = (n << 6) | p
    else:
        n = group(0)
        pos = 1

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    groups = [group(pos + i) for i in range(nbytes)]
    if len(data) > pos + nbytes:
        raise ParseError("trailing garbage after graph6 payload", offset=base + pos + nbytes)

    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if groups[bit // 6] >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    if nbytes and groups[-1] & ((1 << (6 * nbytes - nbits)) - 1):
        raise ParseError("nonzero padding bits in graph6 payload", offset=base + pos + nbytes - 1)
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode to the canonical-length graph6 string (no header)."""
    n = g.n
    if n <= 62:
        head = [n + _G6_MIN]
    elif n <= 258047:
        head = [126] + [_G6_MIN + (n >> s & 63) for s in (12, 6, 0)]
    elif n <= 68719476735:
        head = [126, 126] + [_G6_MIN + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)]
    else:
        raise ValueError("graph too large for graph6")
    groups = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (1 if i in row else 0)
            nbits += 1
            if nbits == 6:
                groups.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        groups.append(acc << (6 - nbits))
    return bytes(head + [q + _G6_MIN for q in groups]).decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: first line n, then one 'u v' per line."""
    lines = text.splitlines()
    body: list[tuple[int, str]] = [
        (no, line.strip()) for no, line in enumerate(lines, 1) if line.strip()
    ]
    if not body:
        raise ParseError("empty edge-list input", line=1)
    first_no, first = body[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(f"expected vertex count, got {first!r}", line=first_no) from None
    if n < 0:
        raise ParseError("vertex count must be nonnegative", line=first_no)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for no, line in body[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=no)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", line=no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range in edge {u} {v}", line=no)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", line=no)
        seen.add(key)
        edges.append((u, v))
    return Graph.from_edges(n, edges)
