"""Exact walk counting: plain walks, star-walks, and color-restricted walks.

All counts are exact arbitrary-precision integers.  Tables small enough to
stay inside 64-bit bounds are computed with numpy integer matrices; a proven
a-priori bound (entries of the length-L table are at most maxdegree**L)
decides up front when that is safe, otherwise the computation falls back to
pure Python big-integer arithmetic.  No floating point is used anywhere.

Species:

    plain             w_L(u, v)   walks u -> v with L steps
    star              s_L(u, v)   walks whose vertices at even positions
                                  0, 2, ..., 2*floor(L/2) all equal u
    color_restricted  walks u -> v with L steps whose p-th step (1-indexed)
                      uses an edge of one fixed color
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import WorkCapExceeded
from .graph_core import ColoredGraph

PLAIN = "plain"
STAR = "star"
COLOR_RESTRICTED = "color_restricted"

DEFAULT_WORK_CAP = 10**8

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class WalkTable:
    """Dense n-by-n table of exact walk counts for one species and length."""

    species: str
    length: int
    entries: tuple[tuple[int, ...], ...]
    position: Optional[int] = None
    color: Optional[int] = None

    def count(self, u: int, v: int) -> int:
        return self.entries[u][v]

    @property
    def n(self) -> int:
        return len(self.entries)


def _check_walk_cap(graph: ColoredGraph, length: int, work_cap: int) -> None:
    estimate = graph.n * graph.n * length * graph.max_degree
    if estimate > work_cap:
        raise WorkCapExceeded(
            f"walk table estimate {estimate} exceeds cap {work_cap}",
            estimate=estimate,
            cap=work_cap,
        )


def _adjacency_rows(graph: ColoredGraph) -> list[list[int]]:
    return [list(graph.neighbors(v)) for v in range(graph.n)]


def _power_python(graph: ColoredGraph, length: int) -> list[list[int]]:
    """A**length over Python ints via sparse row propagation."""
    n = graph.n
    adj = _adjacency_rows(graph)
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(length):
        nxt = []
        for row in rows:
            new = [0] * n
            for x, cnt in enumerate(row):
                if cnt:
                    for y in adj[x]:
                        new[y] += cnt
            nxt.append(new)
        rows = nxt
    return rows


def _power_numpy(graph: ColoredGraph, length: int) -> list[list[int]]:
    n = graph.n
    a = np.zeros((n, n), dtype=np.int64)
    for e in graph.edges:
        a[e.u, e.v] = 1
        a[e.v, e.u] = 1
    out = np.eye(n, dtype=np.int64)
    for _ in range(length):
        out = out @ a
    return [[int(x) for x in row] for row in out]


def walk_counts(graph: ColoredGraph, length: int, work_cap: int = DEFAULT_WORK_CAP) -> WalkTable:
    """Exact table of length-``length`` walk counts between all vertex pairs."""
    if length < 0:
        raise ValueError("walk length must be non-negative")
    _check_walk_cap(graph, length, work_cap)
    if graph.n == 0:
        return WalkTable(species=PLAIN, length=length, entries=())
    # entries are bounded by maxdegree**length, which certifies the int64 path
    if length == 0 or graph.max_degree**length < _INT64_SAFE:
        rows = _power_numpy(graph, length)
    else:
        rows = _power_python(graph, length)
    return WalkTable(species=PLAIN, length=length, entries=tuple(tuple(r) for r in rows))


def hom_cycle_count(graph: ColoredGraph, k: int, work_cap: int = DEFAULT_WORK_CAP) -> int:
    """Number of closed 2k-walks (trace of the 2k-th adjacency power)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    table = walk_counts(graph, 2 * k, work_cap=work_cap)
    return sum(table.entries[v][v] for v in range(graph.n))


def hom_star_count(graph: ColoredGraph, k: int) -> int:
    """Exact sum over vertices of degree**k (closed star maps)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return sum(graph.degree(v) ** k for v in range(graph.n))


def star_walk_counts(graph: ColoredGraph, length: int, work_cap: int = DEFAULT_WORK_CAP) -> WalkTable:
    """Walks pinned to their start at every even position up to 2*floor(L/2).

    Closed form: for even L = 2s the count is degree(u)**s on the diagonal
    and zero elsewhere; for odd L = 2s+1 it is degree(u)**s for each
    neighbor v of u and zero elsewhere.  Length 1 equals adjacency.
    """
    if length < 0:
        raise ValueError("walk length must be non-negative")
    estimate = graph.n * graph.n * max(length, 1)
    if estimate > work_cap:
        raise WorkCapExceeded(
            f"star table estimate {estimate} exceeds cap {work_cap}",
            estimate=estimate,
            cap=work_cap,
        )
    n = graph.n
    s, odd = divmod(length, 2)
    rows = []
    for u in range(n):
        d = graph.degree(u)
        row = [0] * n
        if odd:
            for w in graph.neighbors(u):
                row[w] = d**s
        else:
            row[u] = d**s if length > 0 else 1
        rows.append(tuple(row))
    return WalkTable(species=STAR, length=length, entries=tuple(rows))


def color_restricted_table(
    graph: ColoredGraph,
    length: int,
    position: int,
    color: int,
    work_cap: int = DEFAULT_WORK_CAP,
) -> WalkTable:
    """Walk counts whose ``position``-th step (1-indexed) has the given color.

    Computed exactly as a product of two plain tables around the forced edge:
    count(u, v) = sum over directed edges (a, b) of that color of
    w_{position-1}(u, a) * w_{length-position}(b, v).
    """
    if length < 1:
        raise ValueError("restricted walks need length at least 1")
    if not (1 <= position <= length):
        raise ValueError("restricted position must lie in 1..length")
    before = walk_counts(graph, position - 1, work_cap=work_cap)
    after = walk_counts(graph, length - position, work_cap=work_cap)
    n = graph.n
    directed = []
    for e in graph.edges:
        if e.color == color:
            directed.append((e.u, e.v))
            directed.append((e.v, e.u))
    rows = [[0] * n for _ in range(n)]
    for u in range(n):
        brow = before.entries[u]
        for (a, b) in directed:
            w1 = brow[a]
            if w1:
                arow = after.entries[b]
                row = rows[u]
                for v in range(n):
                    w2 = arow[v]
                    if w2:
                        row[v] += w1 * w2
    return WalkTable(
        species=COLOR_RESTRICTED,
        length=length,
        entries=tuple(tuple(r) for r in rows),
        position=position,
        color=color,
    )


def color_restricted_walk_count(
    graph: ColoredGraph,
    length: int,
    position: int,
    color: int,
    u: int,
    v: int,
    work_cap: int = DEFAULT_WORK_CAP,
) -> int:
    """Single color-restricted walk count w~_{length,position}(u, v, color)."""
    return color_restricted_table(graph, length, position, color, work_cap=work_cap).count(u, v)
