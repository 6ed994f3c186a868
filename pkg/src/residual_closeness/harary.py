"""Harary graphs ``H(k, n)``: ``k``-connected, ``n`` vertices, ``ceil(kn/2)`` edges.

Vertices ``1..n`` sit on a circle. Each vertex is joined to its ``p = k // 2``
nearest neighbors on both sides. For odd ``k`` diametral chords are added:
``(i, i + q)`` for ``i = 1..q`` when ``n = 2q``, and for ``i = 1..q+1`` when
``n = 2q + 1``. In the odd/odd case vertex ``q + 1`` ends up with degree
``k + 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph

__all__ = ["ParityCase", "HararyParams", "HararyParamError", "validate", "harary"]


class HararyParamError(ValueError):
    pass


class ParityCase(str, enum.Enum):
    EVEN_K = "EvenK"
    ODD_K_EVEN_N = "OddK_EvenN"
    ODD_K_ODD_N = "OddK_OddN"


@dataclass(frozen=True)
class HararyParams:
    k: int
    n: int
    parity_case: ParityCase
    p: int
    q: int


def validate(k: int, n: int) -> HararyParams:
    if k < 2:
        raise HararyParamError(f"k must be at least 2, got {k}")
    if k >= n:
        raise HararyParamError(f"need k < n, got k={k}, n={n}")
    p, q = k // 2, n // 2
    if k % 2 == 0:
        case = ParityCase.EVEN_K
        if n <= 2 * p:
            raise HararyParamError(f"n={n} too small for ring offsets 1..{p}")
    else:
        case = ParityCase.ODD_K_EVEN_N if n % 2 == 0 else ParityCase.ODD_K_ODD_N
    # ring offsets 1..p must stay distinct from each other and from the chord
    if 2 * p >= n or (k % 2 == 1 and p >= q):
        raise HararyParamError(f"ring offsets collide for k={k}, n={n}")
    return HararyParams(k, n, case, p, q)


def harary(params: HararyParams | tuple[int, int]) -> Graph:
    if not isinstance(params, HararyParams):
        params = validate(*params)
    n, p, q = params.n, params.p, params.q
    g = Graph(n)
    for i in range(1, n + 1):
        for off in range(1, p + 1):
            j = (i - 1 + off) % n + 1
            g.add_edge(i, j)
    if params.parity_case is ParityCase.ODD_K_EVEN_N:
        for i in range(1, q + 1):
            g.add_edge(i, i + q)
    elif params.parity_case is ParityCase.ODD_K_ODD_N:
        for i in range(1, q + 2):
            g.add_edge(i, i + q)
    return g
