"""Regularization procedures: vertex splitting and the lopsided bipartite cut.

Also hosts the exact maximum-average-degree subgraph (parametric max-flow
over big integers) and threshold peeling, which the lopsided procedure is
built on.  All density and threshold comparisons are exact rationals.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import DegreeZero, EmptyGraph, LemmaViolation, PreconditionError
from .graph_core import Bipartition, ColoredGraph, induced_subgraph

Rational = Union[int, Fraction]


# -- max flow -----------------------------------------------------------------


class _Dinic:
    """Dinic max flow over Python integers (no capacity overflow)."""

    def __init__(self, size: int):
        self.size = size
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, a: int, b: int, capacity: int) -> None:
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(capacity)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)

    def _levels(self, s: int, t: int) -> Optional[list[int]]:
        level = [-1] * self.size
        level[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for eid in self.head[v]:
                w = self.to[eid]
                if self.cap[eid] > 0 and level[w] < 0:
                    level[w] = level[v] + 1
                    q.append(w)
        return level if level[t] >= 0 else None

    def _augment(self, v: int, t: int, limit: int, level: list[int], it: list[int]) -> int:
        if v == t:
            return limit
        while it[v] < len(self.head[v]):
            eid = self.head[v][it[v]]
            w = self.to[eid]
            if self.cap[eid] > 0 and level[w] == level[v] + 1:
                pushed = self._augment(w, t, min(limit, self.cap[eid]), level, it)
                if pushed > 0:
                    self.cap[eid] -= pushed
                    self.cap[eid ^ 1] += pushed
                    return pushed
            it[v] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            it = [0] * self.size
            while True:
                pushed = self._augment(s, t, 1 << 300, level, it)
                if pushed == 0:
                    break
                flow += pushed

    def side_not_reaching(self, t: int) -> list[int]:
        """Vertices with no residual path to t (the maximal min-cut source side)."""
        can_reach = [False] * self.size
        can_reach[t] = True
        # reverse residual reachability: x reaches t iff some residual edge
        # x -> y exists with y already reaching t
        rev: list[list[int]] = [[] for _ in range(self.size)]
        for x in range(self.size):
            for eid in self.head[x]:
                if self.cap[eid] > 0:
                    rev[self.to[eid]].append(x)
        q = deque([t])
        while q:
            y = q.popleft()
            for x in rev[y]:
                if not can_reach[x]:
                    can_reach[x] = True
                    q.append(x)
        return [v for v in range(self.size) if not can_reach[v]]


# -- densest subgraph ----------------------------------------------------------


@dataclass(frozen=True)
class DensestSubgraph:
    """Induced subgraph of maximum average degree.

    ``vertices`` maps the relabeled graph back to original ids (ascending).
    The exact method returns the unique maximum-cardinality optimum (the
    union of all densest vertex sets), which also settles the tie-break
    toward the largest and lexicographically smallest set.
    """

    graph: ColoredGraph
    vertices: tuple[int, ...]
    avg_degree: Fraction


def _edges_within(graph: ColoredGraph, vs: frozenset) -> int:
    return sum(1 for e in graph.edges if e.u in vs and e.v in vs)


def _improve_density(graph: ColoredGraph, g: Fraction) -> Optional[frozenset]:
    """Maximal vertex set W with e(W) > g*|W| strictly, or None.

    Goldberg's network scaled by the denominator of g so all capacities are
    integers: source -> v with q*m, v -> sink with q*m + 2p - q*d(v), and q
    both ways per edge, where g = p/q.  The min cut equals
    q*m*n - 2*max_W (q*e(W) - p*|W|).
    """
    n, m = graph.n, graph.edge_count
    p, q = g.numerator, g.denominator
    s, t = n, n + 1
    net = _Dinic(n + 2)
    for v in range(n):
        net.add_edge(s, v, q * m)
        net.add_edge(v, t, q * m + 2 * p - q * graph.degree(v))
    for e in graph.edges:
        net.add_edge(e.u, e.v, q)
        net.add_edge(e.v, e.u, q)
    flow = net.max_flow(s, t)
    if flow >= q * m * n:
        return None
    side = [v for v in net.side_not_reaching(t) if v < n]
    return frozenset(side) if side else None


def max_avg_degree_subgraph(graph: ColoredGraph, method: str = "exact") -> DensestSubgraph:
    """Induced subgraph maximizing the average degree 2*e(S)/|S|.

    method "exact" (default) iterates parametric max-flow cuts until no
    strict improvement exists; the final extraction at the optimum density
    returns the largest optimal set.  method "greedy" is the classical
    peeling heuristic (at least half the optimum), kept for comparison.
    """
    if graph.edge_count == 0:
        raise EmptyGraph("densest subgraph needs at least one edge")
    if method == "greedy":
        return _greedy_densest(graph)
    if method != "exact":
        raise ValueError("method must be 'exact' or 'greedy'")
    best = frozenset(range(graph.n))
    while True:
        density = Fraction(_edges_within(graph, best), len(best))
        improved = _improve_density(graph, density)
        if improved is None:
            break
        best = improved
    sub, vmap = induced_subgraph(graph, best)
    return DensestSubgraph(
        graph=sub, vertices=vmap, avg_degree=Fraction(2 * sub.edge_count, sub.n)
    )


def _greedy_densest(graph: ColoredGraph) -> DensestSubgraph:
    alive = set(range(graph.n))
    deg = {v: graph.degree(v) for v in alive}
    adj = {v: dict(graph.neighbor_items(v)) for v in alive}
    edges_left = graph.edge_count
    best_set = frozenset(alive)
    best_density = Fraction(2 * edges_left, len(alive))
    while len(alive) > 1:
        v = min(alive, key=lambda x: (deg[x], x))
        alive.remove(v)
        edges_left -= deg[v]
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
        if edges_left == 0:
            break
        density = Fraction(2 * edges_left, len(alive))
        if density > best_density:
            best_density = density
            best_set = frozenset(alive)
    sub, vmap = induced_subgraph(graph, best_set)
    return DensestSubgraph(graph=sub, vertices=vmap, avg_degree=best_density)


# -- threshold peeling ----------------------------------------------------------


def _peel_subset(adj: dict, alive: set, threshold: Rational) -> set:
    """Repeatedly drop the smallest-id live vertex of degree below threshold."""
    alive = set(alive)
    deg = {v: sum(1 for w in adj[v] if w in alive) for v in alive}
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if deg[v] < threshold:
                alive.remove(v)
                for w in adj[v]:
                    if w in alive:
                        deg[w] -= 1
                changed = True
                break
    return alive


def peel_to_min_degree(graph: ColoredGraph, threshold: Rational) -> tuple[ColoredGraph, tuple[int, ...]]:
    """Induced subgraph with every degree >= threshold (possibly empty).

    Deletion order is deterministic (ascending id among candidates), though
    the surviving set is the same for any order.  Returns the relabeled
    subgraph and the map new id -> original id.
    """
    adj = {v: set(graph.neighbors(v)) for v in range(graph.n)}
    alive = _peel_subset(adj, set(range(graph.n)), threshold)
    return induced_subgraph(graph, alive)


# -- vertex splitting ------------------------------------------------------------


@dataclass(frozen=True)
class ColorPreservingMap:
    """Vertex map domain -> codomain sending edges to same-colored edges."""

    domain: ColoredGraph
    codomain: ColoredGraph
    mapping: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def violations(self) -> list[tuple[str, str]]:
        bad: list[tuple[str, str]] = []
        if len(self.mapping) != self.domain.n:
            bad.append(("map_domain", "mapping does not cover the domain graph"))
            return bad
        tgt = self.codomain
        for e in self.domain.edges:
            a, b = self.mapping[e.u], self.mapping[e.v]
            if not (0 <= a < tgt.n and 0 <= b < tgt.n) or a == b or not tgt.has_edge(a, b):
                bad.append(("map_edge", f"edge {e.u}-{e.v} maps to non-edge {a}-{b}"))
                break
            if tgt.color(a, b) != e.color:
                bad.append(
                    ("map_color", f"edge {e.u}-{e.v} color {e.color} maps to color {tgt.color(a, b)}")
                )
                break
        return bad


@dataclass(frozen=True)
class SplitResult:
    """Outcome of the splitting procedure.

    graph is the split graph, psi the color-preserving projection onto the
    source, delta the source minimum degree used for the split.
    """

    source: ColoredGraph
    graph: ColoredGraph
    psi: ColorPreservingMap
    delta: int


def split_violations(result: SplitResult) -> list[tuple[str, str]]:
    """All postcondition failures of a split result, as (name, detail) pairs."""
    src, out, psi, delta = result.source, result.graph, result.psi, result.delta
    bad: list[tuple[str, str]] = []
    if not (src.n <= out.n):
        bad.append(("vertex_lower", f"{out.n} vertices, source has {src.n}"))
    if out.n * delta > 4 * src.edge_count:
        bad.append(("vertex_upper", f"{out.n} vertices exceeds 4e/delta"))
    if out.edge_count != src.edge_count:
        bad.append(("edge_count", f"{out.edge_count} edges, source has {src.edge_count}"))
    for v in range(out.n):
        d = out.degree(v)
        if 2 * d < delta or d > delta:
            bad.append(("degree_window", f"vertex {v} has degree {d}, window [{delta}/2, {delta}]"))
            break
    bad.extend(psi.violations())
    return bad


def split_regularize(graph: ColoredGraph) -> SplitResult:
    """Split every vertex into near-equal bundles of its incident edges.

    With delta the source minimum degree, a vertex of current degree d is
    replaced by s = ceil(d / delta) copies, partitioning its ascending
    neighbor list into s contiguous parts whose sizes land in
    [floor(d/s), ceil(d/s)], a subset of [delta/2, delta].  Edges keep their
    colors, so the projection onto the source is color-preserving and the
    split graph is again properly colored.  Copies created here already meet
    the degree window, so processing them again would be a no-op; vertices
    are handled in ascending source id on the evolving graph.
    """
    delta = graph.min_degree
    if graph.n == 0 or delta == 0:
        raise DegreeZero("splitting needs minimum degree at least 1")
    adj: dict[int, dict[int, int]] = {v: dict(graph.neighbor_items(v)) for v in range(graph.n)}
    origin: dict[int, int] = {v: v for v in range(graph.n)}
    next_id = graph.n
    for v in range(graph.n):
        d = len(adj[v])
        s = -(-d // delta)
        if s == 1:
            continue
        items = sorted(adj[v].items())
        base, extra = divmod(d, s)
        start = 0
        for ci in range(s):
            size = base + (1 if ci < extra else 0)
            chunk = items[start : start + size]
            start += size
            w = next_id
            next_id += 1
            origin[w] = v
            adj[w] = {}
            for (u, c) in chunk:
                adj[w][u] = c
                del adj[u][v]
                adj[u][w] = c
        del adj[v]
    final_ids = sorted(adj)
    relabel = {old: i for i, old in enumerate(final_ids)}
    edges = []
    for old in final_ids:
        for (u, c) in adj[old].items():
            if relabel[old] < relabel[u]:
                edges.append((relabel[old], relabel[u], c))
    out = ColoredGraph.from_edges(len(final_ids), edges)
    psi = ColorPreservingMap(
        domain=out, codomain=graph, mapping=tuple(origin[old] for old in final_ids)
    )
    result = SplitResult(source=graph, graph=out, psi=psi, delta=delta)
    bad = split_violations(result)
    assert not bad, f"split postcondition failed: {bad[0]}"
    return result


# -- lopsided regularization ------------------------------------------------------


@dataclass(frozen=True)
class LopsidedResult:
    """Outcome of the lopsided procedure on a bipartite graph.

    side_a and side_b are original vertex ids; subgraph is the bipartite
    graph between them, relabeled with vertex_map (new id -> original id).
    dyadic_index is the chosen class index i: vertices of side_a have
    subgraph degrees in [2**(i-6) * d, 2**(i-5) * d] for d = avg_degree,
    and side_b degrees never exceed 4d.
    """

    source: ColoredGraph
    sides: Bipartition
    k: int
    avg_degree: Fraction
    quadrant: str
    dyadic_index: int
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    subgraph: ColoredGraph
    vertex_map: tuple[int, ...]
    class_sizes: dict
    peeled: ColoredGraph
    peeled_vertex_map: tuple[int, ...]
    peeled_edge_count: int
    source_edge_count: int


def _pow2(exp: int) -> Fraction:
    return Fraction(2**exp) if exp >= 0 else Fraction(1, 2 ** (-exp))


def _class_size_qualifies(size: int, i: int, k: int, n: int) -> bool:
    # size >= n / (k * 2**(k*i/(k-1))), compared exactly after raising both
    # sides to the (k-1)-th power: (k*size)**(k-1) * 2**(k*i) >= n**(k-1)
    return (k * size) ** (k - 1) * 2 ** (k * i) >= n ** (k - 1)


def lopsided_violations(result: LopsidedResult) -> list[tuple[str, str]]:
    """All conclusion failures of a lopsided result, as (name, detail) pairs."""
    bad: list[tuple[str, str]] = []
    n = result.source.n
    k = result.k
    i = result.dyadic_index
    d = result.avg_degree
    if not _class_size_qualifies(len(result.side_a), i, k, n):
        bad.append(("side_a_size", f"|A| = {len(result.side_a)} below the class threshold"))
    if 64 * len(result.side_b) < n:
        bad.append(("side_b_size", f"|B| = {len(result.side_b)} below n/64"))
    if 8 * result.peeled_edge_count < result.source_edge_count:
        bad.append(("peel_edges", f"peeled graph keeps {result.peeled_edge_count} edges, below e/8"))
    lo = _pow2(i - 6) * d
    hi = _pow2(i - 5) * d
    aset = set(result.side_a)
    for new_id, orig in enumerate(result.vertex_map):
        deg = result.subgraph.degree(new_id)
        if orig in aset:
            if not (lo <= deg <= hi):
                bad.append(("a_degree_window", f"vertex {orig} has degree {deg} outside [{lo}, {hi}]"))
                break
        else:
            if deg > 4 * d:
                bad.append(("b_degree_cap", f"vertex {orig} has degree {deg} above 4d = {4 * d}"))
                break
    return bad


def lopsided_regularize(graph: ColoredGraph, sides: Bipartition, k: int) -> LopsidedResult:
    """Extract a lopsided bipartite pair (A, B) with dyadically pinned degrees.

    Requires the graph to be its own maximum-average-degree subgraph (checked
    exactly; PreconditionError otherwise) and bipartite under ``sides``.

    Pipeline, with d the average degree: classify each side by degree >= 4d
    into (X0, X1) and (Y0, Y1); among the quadrant graphs between X0 and Y1,
    Y0 and X1, and X1 and Y1 keep the one with the most edges (ties in that
    listing order), orienting it so the degree-bounded part plays B's side;
    peel it to minimum degree d/16; split the surviving star side into
    dyadic degree classes Z_i with degrees in [2**(i-6) d, 2**(i-5) d);
    choose the smallest i whose class size reaches n / (k 2**(ki/(k-1)))
    (exact integer comparison); A is that class and B the surviving bounded
    side.  All conclusions are asserted; LemmaViolation signals a failure.
    """
    if k < 2:
        raise ValueError("the lopsided procedure needs k >= 2")
    if graph.edge_count == 0:
        raise EmptyGraph("the lopsided procedure needs at least one edge")
    densest = max_avg_degree_subgraph(graph, method="exact")
    if len(densest.vertices) != graph.n:
        raise PreconditionError(
            "a proper subgraph has larger average degree; pass the densest subgraph instead"
        )
    sides.check(graph)
    n = graph.n
    d = Fraction(2 * graph.edge_count, n)
    four_d = 4 * d
    x0 = frozenset(v for v in sides.left if graph.degree(v) >= four_d)
    x1 = frozenset(sides.left) - x0
    y0 = frozenset(v for v in sides.right if graph.degree(v) >= four_d)
    y1 = frozenset(sides.right) - y0
    # (label, star-role part, bounded-role part), in the canonical order
    quadrants = [
        ("X0-Y1", x0, y1),
        ("Y0-X1", y0, x1),
        ("X1-Y1", x1, y1),
    ]

    def quadrant_edges(star: frozenset, bounded: frozenset) -> int:
        return sum(
            1
            for e in graph.edges
            if (e.u in star and e.v in bounded) or (e.v in star and e.u in bounded)
        )

    counts = [quadrant_edges(star, bounded) for (_, star, bounded) in quadrants]
    pick = max(range(3), key=lambda idx: (counts[idx], -idx))
    label, star_part, bounded_part = quadrants[pick]

    adj = {
        v: {
            w
            for w in graph.neighbors(v)
            if (v in star_part and w in bounded_part) or (v in bounded_part and w in star_part)
        }
        for v in star_part | bounded_part
    }
    alive = _peel_subset(adj, set(adj), d / 16)
    x_star = sorted(v for v in star_part if v in alive)
    y_star = sorted(v for v in bounded_part if v in alive)
    deg1 = {v: sum(1 for w in adj[v] if w in alive) for v in alive}
    e_g1 = sum(deg1[v] for v in x_star)
    peeled_keep = sorted(alive)
    peeled_index = {v: idx for idx, v in enumerate(peeled_keep)}
    peeled = ColoredGraph.from_edges(
        len(peeled_keep),
        [
            (peeled_index[e.u], peeled_index[e.v], e.color)
            for e in graph.edges
            if e.u in peeled_index
            and e.v in peeled_index
            and ((e.u in star_part) != (e.v in star_part))
        ],
    )
    if 8 * e_g1 < graph.edge_count:
        raise LemmaViolation("peeling destroyed more than seven eighths of the edges")

    classes: dict[int, list[int]] = {}
    for v in x_star:
        ratio = Fraction(deg1[v]) / d
        # unique i with 2**(i-6) <= ratio < 2**(i-5)
        i = ratio.numerator.bit_length() - ratio.denominator.bit_length() + 6
        while _pow2(i - 6) > ratio:
            i -= 1
        while _pow2(i - 5) <= ratio:
            i += 1
        classes.setdefault(i, []).append(v)
    chosen = None
    for i in sorted(classes):
        if _class_size_qualifies(len(classes[i]), i, k, n):
            chosen = i
            break
    if chosen is None:
        raise LemmaViolation("no dyadic class reaches its size threshold")

    side_a = tuple(sorted(classes[chosen]))
    side_b = tuple(y_star)
    keep = sorted(side_a + side_b)
    aset = set(side_a)
    index = {v: idx for idx, v in enumerate(keep)}
    sub_edges = [
        (index[e.u], index[e.v], e.color)
        for e in graph.edges
        if (e.u in aset and e.v in index and e.v not in aset)
        or (e.v in aset and e.u in index and e.u not in aset)
    ]
    sub = ColoredGraph.from_edges(len(keep), sub_edges)
    result = LopsidedResult(
        source=graph,
        sides=sides,
        k=k,
        avg_degree=d,
        quadrant=label,
        dyadic_index=chosen,
        side_a=side_a,
        side_b=side_b,
        subgraph=sub,
        vertex_map=tuple(keep),
        class_sizes={i: len(vs) for i, vs in classes.items()},
        peeled=peeled,
        peeled_vertex_map=tuple(peeled_keep),
        peeled_edge_count=e_g1,
        source_edge_count=graph.edge_count,
    )
    bad = lopsided_violations(result)
    if bad:
        raise LemmaViolation(f"conclusion failed: {bad[0]}")
    return result
