"""Deterministic instance generators.

All randomized generators take an explicit seed and are reproducible: the
same arguments always produce the identical object.
"""

from __future__ import annotations

import random
from itertools import combinations

from .errors import OddOrder, SizeLimit, TooManyEdges
from .graph_core import Bipartition, ColoredGraph, LinearTripleSystem

DEFAULT_MAX_VERTICES = 1 << 20


def hypercube(d: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> ColoredGraph:
    """The d-dimensional hypercube, edge color = flipped bit direction.

    Each color class is a perfect matching, so the coloring is proper.  Every
    cycle uses each direction an even number of times, hence no rainbow cycle
    of any length exists in this coloring.
    """
    if d < 0:
        raise ValueError("dimension must be non-negative")
    n = 1 << d
    if n > max_vertices:
        raise SizeLimit(f"hypercube of dimension {d} has {n} vertices, limit {max_vertices}")
    edges = []
    for x in range(n):
        for b in range(d):
            y = x ^ (1 << b)
            if x < y:
                edges.append((x, y, b))
    return ColoredGraph.from_edges(n, edges)


def complete_one_factorization(n: int) -> ColoredGraph:
    """K_n (n even) colored by a round-robin one-factorization.

    Vertices 0..n-2 sit on a circle, vertex n-1 is the hub.  Round r pairs
    the hub with r and pairs (r+i, r-i) mod (n-1) for i = 1..n/2-1; all edges
    of round r get color r.  Each color class is a perfect matching.
    """
    if n < 2 or n % 2 != 0:
        raise OddOrder("a one-factorization of K_n needs even n >= 2")
    m = n - 1
    edges = []
    for r in range(m):
        edges.append((r, n - 1, r))
        for i in range(1, n // 2):
            a = (r + i) % m
            b = (r - i) % m
            edges.append((min(a, b), max(a, b), r))
    return ColoredGraph.from_edges(n, edges)


def greedy_proper_coloring(n: int, pairs: list[tuple[int, int]]) -> list[tuple[int, int, int]]:
    """Color edges in canonical sorted order with the smallest free color.

    Uses at most 2*maxdegree - 1 colors (each endpoint blocks at most
    maxdegree - 1 colors when an edge is processed).
    """
    used: list[set[int]] = [set() for _ in range(n)]
    out = []
    for (u, v) in sorted(pairs):
        c = 0
        blocked = used[u] | used[v]
        while c in blocked:
            c += 1
        used[u].add(c)
        used[v].add(c)
        out.append((u, v, c))
    return out


def random_colored(n: int, m: int, seed: int) -> ColoredGraph:
    """Uniform random simple graph with m edges, greedily properly colored.

    The edge set is drawn uniformly from all m-subsets of vertex pairs; the
    coloring is the deterministic greedy coloring of the sorted edge list.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    all_pairs = list(combinations(range(n), 2))
    if m > len(all_pairs):
        raise TooManyEdges(f"{m} edges requested, K_{n} has only {len(all_pairs)}")
    rng = random.Random(seed)
    pairs = rng.sample(all_pairs, m)
    return ColoredGraph.from_edges(n, greedy_proper_coloring(n, pairs))


def random_bipartite(n_left: int, n_right: int, m: int, seed: int) -> tuple[ColoredGraph, Bipartition]:
    """Uniform random bipartite graph with m edges plus its side tagging.

    Vertices 0..n_left-1 form the LEFT side, the rest the RIGHT side.
    """
    if n_left < 0 or n_right < 0 or m < 0:
        raise ValueError("sizes must be non-negative")
    all_pairs = [(u, n_left + w) for u in range(n_left) for w in range(n_right)]
    if m > len(all_pairs):
        raise TooManyEdges(f"{m} edges requested, K_{{{n_left},{n_right}}} has only {len(all_pairs)}")
    rng = random.Random(seed)
    pairs = rng.sample(all_pairs, m)
    n = n_left + n_right
    graph = ColoredGraph.from_edges(n, greedy_proper_coloring(n, pairs))
    return graph, Bipartition.from_left(n, range(n_left))


def random_linear_triple_system(
    n: int, m: int, seed: int, max_attempts: int | None = None
) -> LinearTripleSystem:
    """Greedy random linear triple system with up to m triples.

    Draws uniform random triples and keeps one iff it reuses no vertex pair
    of an already kept triple (which is exactly linearity).  Stops after m
    kept triples or after the attempt budget (default 200*m + 200) runs out,
    so the result can have fewer than m triples.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    if max_attempts is None:
        max_attempts = 200 * m + 200
    rng = random.Random(seed)
    kept: list[tuple[int, int, int]] = []
    used_pairs: set[tuple[int, int]] = set()
    attempts = 0
    while len(kept) < m and attempts < max_attempts and n >= 3:
        attempts += 1
        t = tuple(sorted(rng.sample(range(n), 3)))
        pairs = ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))
        if any(p in used_pairs for p in pairs):
            continue
        used_pairs.update(pairs)
        kept.append(t)
    return LinearTripleSystem.from_triples(n, kept)
