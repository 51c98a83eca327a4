"""Simple undirected graphs in canonical form, plus edge-list file I/O.

Vertices are dense integers ``0..n-1``. Edges are stored as sorted pairs in
lexicographic order, so iteration order is deterministic everywhere. Graphs
are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import ParseError, ValidationError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count, canonical edge tuple, adjacency."""

    n: int
    edges: tuple[Edge, ...]
    _adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _edge_set: frozenset[Edge] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(
            self, "_adjacency", tuple(tuple(sorted(a)) for a in adj)
        )
        object.__setattr__(self, "_edge_set", frozenset(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_set if u < v else (v, u) in self._edge_set


def graph_new(n: int, edges) -> Graph:
    """Build a canonical :class:`Graph` from a vertex count and edge pairs.

    Duplicate pairs collapse silently; self-loops and out-of-range indices
    are rejected.
    """
    if n < 1:
        raise ValidationError(f"graph needs at least one vertex, got n={n}")
    canon: set[Edge] = set()
    for pair in edges:
        u, v = pair
        if u == v:
            raise ValidationError(f"self-loop in pair ({u}, {v})")
        if not (0 <= u < n) or not (0 <= v < n):
            raise ValidationError(f"vertex index out of range 0..{n - 1} in pair ({u}, {v})")
        canon.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(canon)))


class Partition:
    """Union-find over ``n`` vertices with union by rank and path halving.

    Single-owner mutable: safe to move between threads, not to share while
    mutating.
    """

    __slots__ = ("parent", "rank", "count")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.count = n

    def find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(self, u: int, v: int) -> bool:
        """Merge the components of u and v; True iff they were distinct."""
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        if self.rank[ru] < self.rank[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        if self.rank[ru] == self.rank[rv]:
            self.rank[ru] += 1
        self.count -= 1
        return True

    def same(self, u: int, v: int) -> bool:
        return self.find(u) == self.find(v)

    def copy(self) -> "Partition":
        dup = Partition.__new__(Partition)
        dup.parent = self.parent[:]
        dup.rank = self.rank[:]
        dup.count = self.count
        return dup


def connected_components(g: Graph) -> list[int]:
    """Label vertices by component id; ids run 0..k-1 ordered by smallest member."""
    labels = [-1] * g.n
    next_id = 0
    for start in range(g.n):
        if labels[start] != -1:
            continue
        labels[start] = next_id
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if labels[w] == -1:
                    labels[w] = next_id
                    queue.append(w)
        next_id += 1
    return labels


def component_count(g: Graph) -> int:
    labels = connected_components(g)
    return max(labels) + 1 if labels else 0


def induced_subgraph(g: Graph, vs) -> tuple[Graph, list[int]]:
    """Subgraph induced by vertex set ``vs`` plus a map back to original indices.

    The returned list maps new index -> old index; new indices follow the
    ascending order of ``vs``.
    """
    vlist = sorted(set(vs))
    if not vlist:
        raise ValidationError("induced subgraph needs a nonempty vertex set")
    for v in vlist:
        if not (0 <= v < g.n):
            raise ValidationError(f"vertex {v} out of range 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(vlist)}
    edges = [
        (index[u], index[v])
        for (u, v) in g.edges
        if u in index and v in index
    ]
    return graph_new(len(vlist), edges), vlist


def read_edgelist(text: str) -> Graph:
    """Parse the ``p <n> <m>`` / ``e <u> <v>`` edge-list format (1-indexed).

    Comment lines starting with ``c`` are ignored. The header must precede
    all edges and ``m`` must match the number of ``e`` lines.
    """
    n = None
    m = None
    edges: list[Edge] = []
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(tokens) != 3:
                raise ParseError(f"malformed header {line!r}, expected 'p <n> <m>'", lineno)
            try:
                n, m = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"non-integer header fields in {line!r}", lineno) from None
            if n < 1 or m < 0:
                raise ParseError(f"invalid sizes n={n}, m={m}", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before header", lineno)
            if len(tokens) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"non-integer endpoints in {line!r}", lineno) from None
            for idx in (u, v):
                if not (1 <= idx <= n):
                    raise ParseError(f"index {idx} > n={n}" if idx > n else f"index {idx} < 1", lineno)
            if u == v:
                raise ParseError(f"self-loop e {u} {v}", lineno)
            edges.append((u - 1, v - 1))
            edge_lines += 1
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p <n> <m>' header")
    if edge_lines != m:
        raise ParseError(f"header claims {m} edges, found {edge_lines}")
    return graph_new(n, edges)


def write_edgelist(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
