"""Closeness ``C(G) = sum_{i != j} 2**-d(i, j)`` and link residual closeness.

Two sweep methods compute ``C(G - e)`` for every edge ``e``:

``"naive"``
    rebuilds ``G - e`` and runs a BFS from every vertex.
``"affected"``
    starts from the all-pairs distance matrix of ``G``. A BFS row from
    source ``i`` can only change when one endpoint of ``e`` has the other
    endpoint as its *only* shortest-path parent; only those rows are
    repaired, and only on the vertices that lose every parent.

Both return identical exact values; the test-suite checks them against each
other.
"""

from __future__ import annotations

import heapq
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .dyadic import DyadicValue, from_histogram
from .graph import Edge, Graph, GraphError, MissingEdgeError, _bfs0

__all__ = [
    "ResidualReport",
    "distance_histogram",
    "closeness",
    "closeness_after_link_removal",
    "edge_deletion_closeness",
    "link_residual_closeness",
    "normalized_residual",
    "render_fraction",
]

METHODS = ("affected", "naive")


@dataclass(frozen=True)
class ResidualReport:
    closeness: DyadicValue
    residual: DyadicValue
    delta: DyadicValue
    normalized: Fraction
    argmin_edges: list[Edge] = field(default_factory=list)

    @property
    def normalized_decimal(self) -> str:
        return render_fraction(self.normalized)


def distance_histogram(g: Graph) -> Counter:
    """Counts of ordered pairs ``(i, j)``, ``i != j``, by finite distance."""
    hist: Counter = Counter()
    adj = g.adjacency0()
    for s in range(g.n):
        hist.update(d for d in _bfs0(adj, s) if d)
    return hist


def closeness(g: Graph) -> DyadicValue:
    return from_histogram(distance_histogram(g))


def closeness_after_link_removal(g: Graph, e: Edge | tuple[int, int]) -> DyadicValue:
    return closeness(g.without_edge(*e))


def normalized_residual(c: DyadicValue, r: DyadicValue) -> Fraction:
    """``(C - R) / C`` as an exact fraction."""
    if not c:
        raise ZeroDivisionError("normalized residual closeness is undefined for C = 0")
    return (c - r).to_fraction() / c.to_fraction()


def render_fraction(x: Fraction, digits: int = 20) -> str:
    """Decimal string, exact when it terminates within ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(x.numerator) / Decimal(x.denominator)
    s = format(d.normalize(), "f")
    return "0" if s in ("-0", "0E-20") else s


# -- affected-row sweep -----------------------------------------------------


def _distance_matrix(g: Graph) -> np.ndarray:
    n = g.n
    adj = g.adjacency0()
    rows = np.repeat(np.arange(n), [len(a) for a in adj])
    cols = np.fromiter((w for a in adj for w in a), dtype=np.int64, count=len(rows))
    mat = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    sp = shortest_path(mat, method="D", directed=False, unweighted=True)
    out = np.full((n, n), -1, dtype=np.int64)
    finite = np.isfinite(sp)
    out[finite] = sp[finite].astype(np.int64)
    return out


def _parent_counts(dist: np.ndarray, heads: np.ndarray, tails: np.ndarray) -> np.ndarray:
    # pc[i, v] = #neighbors u of v with d(i, u) = d(i, v) - 1
    n = dist.shape[0]
    du, dv = dist[:, heads], dist[:, tails]
    is_parent = (du >= 0) & (dv == du + 1)
    pc = np.zeros((n, n), dtype=np.int64)
    np.add.at(pc.T, tails, is_parent.T.astype(np.int64))
    return pc


def _repair_row(adj, row, pcrow, cut_parent, child):
    """Changed (old, new) distances in one BFS row after deleting ``(cut_parent, child)``."""
    lost: dict[int, int] = {}
    orphans = [child]
    member = {child}
    i = 0
    while i < len(orphans):
        u = orphans[i]
        i += 1
        nxt = row[u] + 1
        for v in adj[u]:
            if row[v] == nxt:
                c = lost.get(v, 0) + 1
                lost[v] = c
                if c == pcrow[v]:
                    orphans.append(v)
                    member.add(v)
    if len(orphans) == 1:
        alt = [row[w] for w in adj[child] if w != cut_parent and row[w] >= 0]
        return [(row[child], min(alt) + 1 if alt else None)]
    heap = []
    for v in orphans:
        best = None
        for w in adj[v]:
            if w in member or (v == child and w == cut_parent):
                continue
            dw = row[w]
            if dw >= 0 and (best is None or dw + 1 < best):
                best = dw + 1
        if best is not None:
            heap.append((best, v))
    heapq.heapify(heap)
    new: dict[int, int] = {}
    while heap:
        d, v = heapq.heappop(heap)
        if v in new:
            continue
        new[v] = d
        for w in adj[v]:
            if w in member and w not in new:
                heapq.heappush(heap, (d + 1, w))
    return [(row[v], new.get(v)) for v in orphans]


def _affected_sweep(g: Graph, edges: list[Edge]) -> list[DyadicValue]:
    adj = g.adjacency0()
    dist = _distance_matrix(g)
    n = g.n
    directed = [(i, j) for i in range(n) for j in adj[i]]
    heads = np.array([a for a, _ in directed], dtype=np.int64)
    tails = np.array([b for _, b in directed], dtype=np.int64)
    pc = _parent_counts(dist, heads, tails)

    base: Counter = Counter(dist[dist > 0].tolist())
    if not edges:
        return []
    r = np.array([e.u - 1 for e in edges], dtype=np.int64)
    s = np.array([e.v - 1 for e in edges], dtype=np.int64)
    dr, ds = dist[:, r], dist[:, s]
    s_orphaned = (dr >= 0) & (ds == dr + 1) & (pc[:, s] == 1)
    r_orphaned = (ds >= 0) & (dr == ds + 1) & (pc[:, r] == 1)

    rows = dist.tolist()
    pcs = pc.tolist()
    changes: list[Counter] = [Counter() for _ in edges]
    for mask, parent_idx, child_idx in ((s_orphaned, r, s), (r_orphaned, s, r)):
        src, eidx = np.nonzero(mask)
        for i, j in zip(src.tolist(), eidx.tolist()):
            delta = changes[j]
            for old, new in _repair_row(
                adj, rows[i], pcs[i], int(parent_idx[j]), int(child_idx[j])
            ):
                delta[old] -= 1
                if new is not None:
                    delta[new] += 1
    out = []
    for delta in changes:
        hist = dict(base)
        for d, c in delta.items():
            hist[d] = hist.get(d, 0) + c
        out.append(from_histogram(hist))
    return out


def _naive_sweep(g: Graph, edges: list[Edge]) -> list[DyadicValue]:
    return [closeness(g.without_edge(*e)) for e in edges]


def _sweep_chunk(args) -> list[DyadicValue]:
    g, edges, method = args
    if method == "naive":
        return _naive_sweep(g, edges)
    return _affected_sweep(g, edges)


def edge_deletion_closeness(
    g: Graph,
    edges: list[Edge] | None = None,
    *,
    method: str = "affected",
    workers: int = 1,
) -> list[DyadicValue]:
    """``C(G - e)`` for each edge, in the order given (default: all edges, sorted)."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if edges is None:
        edges = g.edges()
    else:
        edges = [Edge.of(*e) for e in edges]
        for e in edges:
            if not g.has_edge(*e):
                raise MissingEdgeError(f"edge {tuple(e)} not in graph")
    if workers <= 1 or len(edges) < 2:
        return _sweep_chunk((g, edges, method))
    size = -(-len(edges) // workers)
    chunks = [edges[i : i + size] for i in range(0, len(edges), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_sweep_chunk, [(g, c, method) for c in chunks])
        return [v for part in parts for v in part]


def link_residual_closeness(
    g: Graph, *, method: str = "affected", workers: int = 1
) -> ResidualReport:
    """Minimum closeness over all single-edge deletions, with every minimizing edge."""
    edges = g.edges()
    if not edges:
        raise GraphError("link residual closeness needs at least one edge")
    c = closeness(g)
    values = edge_deletion_closeness(g, edges, method=method, workers=workers)
    r = min(values)
    argmin = [e for e, v in zip(edges, values) if v == r]
    return ResidualReport(
        closeness=c,
        residual=r,
        delta=c - r,
        normalized=normalized_residual(c, r),
        argmin_edges=argmin,
    )
