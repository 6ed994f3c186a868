"""Undirected simple graphs on vertices ``1..n`` with BFS distances.

All public interfaces use 1-based vertex ids. Distances to unreachable
vertices are reported as ``None``.
"""

from __future__ import annotations

import io
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "Edge",
    "DistanceRow",
    "Graph",
    "GraphError",
    "SelfLoopError",
    "VertexRangeError",
    "DuplicateEdgeError",
    "MissingEdgeError",
    "new_graph",
    "add_edge",
    "remove_edge",
    "bfs_distances",
    "all_pairs_distances",
    "read_edgelist",
    "write_edgelist",
    "parse_edgelist",
    "format_edgelist",
]

UNREACHABLE = None


class GraphError(ValueError):
    pass


class SelfLoopError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class MissingEdgeError(GraphError):
    pass


class Edge(NamedTuple):
    """An undirected edge, canonicalized so that ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> Edge:
        if a == b:
            raise SelfLoopError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


@dataclass(frozen=True)
class DistanceRow:
    source: int
    dist: tuple  # dist[j - 1] is d(source, j), None when unreachable

    def __getitem__(self, j: int):
        return self.dist[j - 1]

    def __len__(self) -> int:
        return len(self.dist)


class Graph:
    """Adjacency-list graph. Neighbor lists are kept sorted."""

    __slots__ = ("_adj", "_m")

    def __init__(self, n: int) -> None:
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        self._adj: list[list[int]] = [[] for _ in range(n)]
        self._m = 0

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._m

    def _check(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise VertexRangeError(f"vertex {v} outside 1..{self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return tuple(w + 1 for w in self._adj[v - 1])

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v - 1])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return (v - 1) in self._adj[u - 1]

    def edges(self) -> list[Edge]:
        """All edges in lexicographic order."""
        return [
            Edge(i + 1, j + 1) for i, nb in enumerate(self._adj) for j in nb if j > i
        ]

    def add_edge(self, u: int, v: int) -> Graph:
        """Insert ``(u, v)`` in place and return ``self``."""
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        self._check(u)
        self._check(v)
        a, b = self._adj[u - 1], self._adj[v - 1]
        if (v - 1) in a:
            raise DuplicateEdgeError(f"edge ({min(u, v)}, {max(u, v)}) already present")
        a.append(v - 1)
        a.sort()
        b.append(u - 1)
        b.sort()
        self._m += 1
        return self

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g._adj = [list(nb) for nb in self._adj]
        g._m = self._m
        return g

    def without_edge(self, u: int, v: int) -> Graph:
        """Return a copy with ``(u, v)`` removed; ``self`` is untouched."""
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not self.has_edge(u, v):
            raise MissingEdgeError(f"edge ({min(u, v)}, {max(u, v)}) not in graph")
        g = self.copy()
        g._adj[u - 1].remove(v - 1)
        g._adj[v - 1].remove(u - 1)
        g._m -= 1
        return g

    def adjacency0(self) -> list[list[int]]:
        """0-based neighbor lists (shared, do not mutate)."""
        return self._adj

    def bfs(self, s: int) -> DistanceRow:
        self._check(s)
        return DistanceRow(s, tuple(_bfs0(self._adj, s - 1)))

    def distances(self) -> list[DistanceRow]:
        return [self.bfs(s) for s in range(1, self.n + 1)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def _bfs0(adj: list[list[int]], s: int) -> list[int | None]:
    dist: list[int | None] = [None] * len(adj)
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return dist


def new_graph(n: int) -> Graph:
    return Graph(n)


def add_edge(g: Graph, e: Edge | tuple[int, int]) -> Graph:
    return g.add_edge(*e)


def remove_edge(g: Graph, e: Edge | tuple[int, int]) -> Graph:
    return g.without_edge(*e)


def bfs_distances(g: Graph, s: int) -> DistanceRow:
    return g.bfs(s)


def all_pairs_distances(g: Graph) -> list[DistanceRow]:
    return g.distances()


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    g = Graph(n)
    for u, v in edges:
        g.add_edge(u, v)
    return g


# Edge-list text format: '#' comments, optional "n <count>" header as the
# first non-comment line, then one "u v" pair per line.


def parse_edgelist(text: str) -> Graph:
    declared = None
    pairs: list[tuple[int, int]] = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_data or len(parts) != 2:
                raise GraphError(f"line {lineno}: misplaced or malformed 'n' header")
            declared = int(parts[1])
            seen_data = True
            continue
        seen_data = True
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
    top = max((max(p) for p in pairs), default=0)
    n = declared if declared is not None else top
    if n < 1:
        raise GraphError("edge list declares no vertices")
    return from_edges(n, pairs)


def format_edgelist(g: Graph, comment: str | None = None) -> str:
    buf = io.StringIO()
    if comment:
        buf.write(f"# {comment}\n")
    buf.write(f"n {g.n}\n")
    for e in g.edges():
        buf.write(f"{e.u} {e.v}\n")
    return buf.getvalue()


def read_edgelist(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edgelist(fh.read())


def write_edgelist(g: Graph, path: str | os.PathLike, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edgelist(g, comment))
