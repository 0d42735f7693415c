"""Exhaustive closed-walk census with degeneracy classification.

A closed 2k-walk is a vertex sequence v_0 v_1 ... v_2k with consecutive
vertices adjacent and v_2k = v_0.  The walk is

  * vertex-degenerate at a position pair (i, j), i < j, {i, j} != {0, 2k},
    when v_i = v_j;
  * color-degenerate at an edge-index pair (i, j), 0 <= i < j <= 2k-1, when
    the i-th and j-th steps use edges of equal color;
  * degenerate when either happens anywhere, and rainbow otherwise.

A non-degenerate closed 2k-walk visits 2k distinct vertices on 2k distinctly
colored edges, i.e. it traverses a rainbow 2k-cycle.

Classified families (names chosen by what the walks do):

  vertex_return_counts[s]   walks with v_0 = v_{s+1}; possible for
                            1 <= s <= 2k-3 (s = 0 and s = 2k-2 would force a
                            loop, s = 2k-1 is the excluded closing pair)
  color_repeat_counts[t]    walks whose first step color reappears at step t,
                            1 <= t <= 2k-1
  anchored_counts[s]        walks with v_0 = v_2 = ... = v_{2s}, 0 <= s <= k
                            (s = 0 counts everything, s = k counts star maps)

Position pairs are recorded literally, without modular folding; the tallies
for every legal pair are kept in the profile for audit.  ``pair_type`` exposes
both the literal and the modular reading of a pair's distance type.

Closed forms used by the fast counters and cross-checked in tests:

  anchored_counts[s]       = sum_x degree(x)**s * w_{2k-2s}(x, x)
  vertex_return_counts[1]  = anchored_counts[1]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import WorkCapExceeded
from .graph_core import ColoredGraph
from .walks import DEFAULT_WORK_CAP, walk_counts


@dataclass(frozen=True)
class ClosedWalk:
    """One closed 2k-walk; classification helpers recompute from the graph."""

    k: int
    vertices: tuple[int, ...]  # length 2k+1, first == last

    def colors(self, graph: ColoredGraph) -> tuple[int, ...]:
        vs = self.vertices
        return tuple(graph.color(vs[i], vs[i + 1]) for i in range(2 * self.k))

    def vertex_coincidences(self) -> list[tuple[int, int]]:
        L = 2 * self.k
        vs = self.vertices
        out = []
        for i in range(L + 1):
            for j in range(i + 1, L + 1):
                if (i, j) == (0, L):
                    continue
                if vs[i] == vs[j]:
                    out.append((i, j))
        return out

    def color_coincidences(self, graph: ColoredGraph) -> list[tuple[int, int]]:
        L = 2 * self.k
        cs = self.colors(graph)
        return [(i, j) for i in range(L) for j in range(i + 1, L) if cs[i] == cs[j]]

    def is_degenerate(self, graph: ColoredGraph) -> bool:
        return bool(self.vertex_coincidences() or self.color_coincidences(graph))


@dataclass(frozen=True)
class DegeneracyProfile:
    """Complete census of closed 2k-walks of one graph."""

    k: int
    hom_count: int
    rainbow_count: int
    degenerate_count: int
    vertex_return_counts: dict
    color_repeat_counts: dict
    anchored_counts: dict
    vertex_pair_tallies: dict
    color_pair_tallies: dict

    def to_document(self) -> dict:
        """JSON-ready form; counts rendered as decimal strings (they can
        exceed the range of common fixed-width consumers)."""

        def smap(d: dict) -> dict:
            return {str(key): str(val) for key, val in sorted(d.items())}

        return {
            "k": self.k,
            "hom_count": str(self.hom_count),
            "rainbow_count": str(self.rainbow_count),
            "degenerate_count": str(self.degenerate_count),
            "vertex_return_counts": smap(self.vertex_return_counts),
            "color_repeat_counts": smap(self.color_repeat_counts),
            "anchored_counts": smap(self.anchored_counts),
            "vertex_pair_tallies": [
                [i, j, str(c)] for (i, j), c in sorted(self.vertex_pair_tallies.items())
            ],
            "color_pair_tallies": [
                [i, j, str(c)] for (i, j), c in sorted(self.color_pair_tallies.items())
            ],
        }


def pair_type(i: int, j: int, k: int, kind: str, modular: bool = False) -> int:
    """Distance type of a degeneracy position pair.

    Literal reading: |i - j| - 1 for vertex pairs, |i - j| for color pairs.
    Modular reading replaces |i - j| by the cyclic distance modulo 2k.
    """
    gap = abs(i - j)
    if modular:
        gap = min(gap, 2 * k - gap)
    if kind == "vertex":
        return gap - 1
    if kind == "color":
        return gap
    raise ValueError("kind must be 'vertex' or 'color'")


def census_work_estimate(graph: ColoredGraph, k: int) -> int:
    return graph.n * graph.max_degree ** max(2 * k - 1, 0)


def _check_census_cap(graph: ColoredGraph, k: int, work_cap: int) -> None:
    estimate = census_work_estimate(graph, k)
    if estimate > work_cap:
        raise WorkCapExceeded(
            f"census estimate {estimate} exceeds cap {work_cap}",
            estimate=estimate,
            cap=work_cap,
        )


def _closed_walk_matrix(graph: ColoredGraph, k: int) -> np.ndarray:
    """All closed 2k-walks as rows (2k+1 columns), in depth-first order
    (ascending start vertex, ascending neighbor at every step)."""
    n = graph.n
    L = 2 * k
    maxdeg = graph.max_degree
    if n == 0 or maxdeg == 0:
        return np.empty((0, L + 1), dtype=np.int64)
    pad = np.full((n, maxdeg), -1, dtype=np.int64)
    for v in range(n):
        nbrs = graph.neighbors(v)
        pad[v, : len(nbrs)] = nbrs
    adj = np.zeros((n, n), dtype=bool)
    for e in graph.edges:
        adj[e.u, e.v] = True
        adj[e.v, e.u] = True
    walks = np.arange(n, dtype=np.int64).reshape(n, 1)
    for _ in range(L - 1):
        cand = pad[walks[:, -1]]  # rows x maxdeg
        mask = (cand >= 0).ravel()
        expanded = np.repeat(walks, maxdeg, axis=0)[mask]
        walks = np.hstack([expanded, cand.reshape(-1, 1)[mask]])
    # final step must close the walk
    closing = adj[walks[:, -1], walks[:, 0]]
    walks = walks[closing]
    return np.hstack([walks, walks[:, :1]])


def _color_index_matrix(graph: ColoredGraph) -> np.ndarray:
    """Dense lookup of color identity, remapped to small local indices."""
    n = graph.n
    local: dict[int, int] = {}
    mat = np.full((n, n), -1, dtype=np.int64)
    for e in graph.edges:
        idx = local.setdefault(e.color, len(local))
        mat[e.u, e.v] = idx
        mat[e.v, e.u] = idx
    return mat


def walk_census(graph: ColoredGraph, k: int, work_cap: int = DEFAULT_WORK_CAP) -> DegeneracyProfile:
    """Enumerate every closed 2k-walk and classify all degeneracies exactly."""
    if k < 2:
        raise ValueError("the census needs k >= 2")
    _check_census_cap(graph, k, work_cap)
    L = 2 * k
    W = _closed_walk_matrix(graph, k)
    rows = W.shape[0]

    vertex_masks: dict[tuple[int, int], np.ndarray] = {}
    for i in range(L + 1):
        for j in range(i + 1, L + 1):
            if (i, j) == (0, L):
                continue
            vertex_masks[(i, j)] = W[:, i] == W[:, j] if rows else np.zeros(0, dtype=bool)

    if rows:
        cmat = _color_index_matrix(graph)
        E = cmat[W[:, :-1], W[:, 1:]]  # rows x 2k step colors
    else:
        E = np.empty((0, L), dtype=np.int64)
    color_masks: dict[tuple[int, int], np.ndarray] = {}
    for i in range(L):
        for j in range(i + 1, L):
            color_masks[(i, j)] = E[:, i] == E[:, j] if rows else np.zeros(0, dtype=bool)

    if rows:
        degenerate = np.zeros(rows, dtype=bool)
        for m in vertex_masks.values():
            degenerate |= m
        for m in color_masks.values():
            degenerate |= m
        degenerate_count = int(np.count_nonzero(degenerate))
    else:
        degenerate_count = 0

    vertex_return = {
        s: int(np.count_nonzero(vertex_masks[(0, s + 1)])) for s in range(1, L - 2)
    }
    color_repeat = {t: int(np.count_nonzero(color_masks[(0, t)])) for t in range(1, L)}

    anchored = {0: rows}
    if rows:
        pinned = np.ones(rows, dtype=bool)
        for s in range(1, k + 1):
            pinned &= W[:, 2 * s] == W[:, 0]
            anchored[s] = int(np.count_nonzero(pinned))
    else:
        for s in range(1, k + 1):
            anchored[s] = 0

    return DegeneracyProfile(
        k=k,
        hom_count=rows,
        rainbow_count=rows - degenerate_count,
        degenerate_count=degenerate_count,
        vertex_return_counts=vertex_return,
        color_repeat_counts=color_repeat,
        anchored_counts=anchored,
        vertex_pair_tallies={p: int(np.count_nonzero(m)) for p, m in vertex_masks.items()},
        color_pair_tallies={p: int(np.count_nonzero(m)) for p, m in color_masks.items()},
    )


def iter_closed_walks(graph: ColoredGraph, k: int) -> Iterator[ClosedWalk]:
    """Pure-Python closed-walk enumeration (reference path, small inputs)."""
    L = 2 * k
    n = graph.n

    def extend(path: list[int]) -> Iterator[ClosedWalk]:
        if len(path) == L:
            if graph.has_edge(path[-1], path[0]):
                yield ClosedWalk(k=k, vertices=tuple(path) + (path[0],))
            return
        for w in graph.neighbors(path[-1]):
            path.append(w)
            yield from extend(path)
            path.pop()

    for start in range(n):
        yield from extend([start])


def walk_census_reference(graph: ColoredGraph, k: int) -> DegeneracyProfile:
    """Slow per-walk census used to cross-check the vectorized path."""
    if k < 2:
        raise ValueError("the census needs k >= 2")
    L = 2 * k
    vertex_return = {s: 0 for s in range(1, L - 2)}
    color_repeat = {t: 0 for t in range(1, L)}
    anchored = {s: 0 for s in range(k + 1)}
    vpairs: dict[tuple[int, int], int] = {}
    cpairs: dict[tuple[int, int], int] = {}
    for i in range(L + 1):
        for j in range(i + 1, L + 1):
            if (i, j) != (0, L):
                vpairs[(i, j)] = 0
    for i in range(L):
        for j in range(i + 1, L):
            cpairs[(i, j)] = 0
    hom = 0
    degenerate = 0
    for walk in iter_closed_walks(graph, k):
        hom += 1
        vc = walk.vertex_coincidences()
        cc = walk.color_coincidences(graph)
        if vc or cc:
            degenerate += 1
        for p in vc:
            vpairs[p] += 1
        for p in cc:
            cpairs[p] += 1
        vs = walk.vertices
        for s in range(1, L - 2):
            if vs[0] == vs[s + 1]:
                vertex_return[s] += 1
        cs = walk.colors(graph)
        for t in range(1, L):
            if cs[0] == cs[t]:
                color_repeat[t] += 1
        for s in range(k + 1):
            if all(vs[2 * j] == vs[0] for j in range(s + 1)):
                anchored[s] += 1
    return DegeneracyProfile(
        k=k,
        hom_count=hom,
        rainbow_count=hom - degenerate,
        degenerate_count=degenerate,
        vertex_return_counts=vertex_return,
        color_repeat_counts=color_repeat,
        anchored_counts=anchored,
        vertex_pair_tallies=vpairs,
        color_pair_tallies=cpairs,
    )


def count_anchored(graph: ColoredGraph, k: int, s: int, work_cap: int = DEFAULT_WORK_CAP) -> int:
    """Closed 2k-walks whose first 2s steps bounce around the start vertex.

    Exact closed form sum_x degree(x)**s * w_{2k-2s}(x, x); for s = 0 this is
    the plain closed-walk count, for s = k the star power sum.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not (0 <= s <= k):
        raise ValueError("anchoring depth s must lie in 0..k")
    table = walk_counts(graph, 2 * (k - s), work_cap=work_cap)
    return sum(graph.degree(x) ** s * table.entries[x][x] for x in range(graph.n))


def count_immediate_return(graph: ColoredGraph, k: int, work_cap: int = DEFAULT_WORK_CAP) -> int:
    """Closed 2k-walks with v_0 = v_2 (exact, via the anchored closed form)."""
    return count_anchored(graph, k, 1, work_cap=work_cap)


def count_cycle_copies(graph: ColoredGraph, length: int, work_cap: int = DEFAULT_WORK_CAP) -> int:
    """Number of cycle subgraphs (unlabeled copies) of the given length.

    Backtracking with the canonical form: the smallest cycle vertex is the
    start, all other vertices exceed it, and the second vertex is smaller
    than the last to count each cycle once.  Raises WorkCapExceeded when the
    number of extension steps passes the cap.
    """
    if length < 3:
        raise ValueError("cycles have length at least 3")
    n = graph.n
    adj = [graph.neighbors(v) for v in range(n)]
    count = 0
    steps = 0

    def extend(start: int, path: list[int], on_path: set[int]) -> None:
        nonlocal count, steps
        v = path[-1]
        if len(path) == length:
            if graph.has_edge(v, start) and path[1] < path[-1]:
                count += 1
            return
        for w in adj[v]:
            if w <= start or w in on_path:
                continue
            steps += 1
            if steps > work_cap:
                raise WorkCapExceeded(
                    f"cycle enumeration exceeded cap {work_cap}", estimate=steps, cap=work_cap
                )
            path.append(w)
            on_path.add(w)
            extend(start, path, on_path)
            on_path.remove(w)
            path.pop()

    for start in range(n):
        extend(start, [start], {start})
    return count
