from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from residual_closeness.graph import Graph, from_edges

INF = float("inf")

# filled by test_acceptance.py, printed at the end of the run
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def floyd_warshall(n, edges):
    """Reference distances, independent of the BFS code under test."""
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u - 1][v - 1] = d[v - 1][u - 1] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def reference_closeness(n, edges) -> Fraction:
    d = floyd_warshall(n, edges)
    return sum(
        (Fraction(1, 2 ** int(d[i][j])) for i in range(n) for j in range(n) if i != j and d[i][j] != INF),
        Fraction(0),
    )


def circulant_edges(n, offsets, extra=()):
    out = set()
    for i in range(n):
        for o in offsets:
            a, b = i + 1, (i + o) % n + 1
            out.add((min(a, b), max(a, b)))
    for a, b in extra:
        out.add((min(a, b), max(a, b)))
    return sorted(out)


@st.composite
def small_graphs(draw, max_n=12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_edges(n, chosen)


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    return from_edges(n, combinations(range(1, n + 1), 2))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def record_criterion():
    def _record(name, ok, detail=""):
        ACCEPTANCE_RESULTS[name] = (bool(ok), detail)
        return ok

    return _record
