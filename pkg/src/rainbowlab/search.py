"""Rainbow-cycle search with certificates, and the triple-system reduction.

``find_rainbow_cycle`` is an exhaustive backtracking search over simple paths
carrying a used-color set, in canonical depth-first order (smallest start
vertex, ascending neighbors, interior vertices above the start).  A NONE
answer is therefore a certificate of non-existence, unless WorkCapExceeded
interrupts the sweep, in which case no claim is made.

``loose_cycle_via_reduction`` turns a linear triple system into colored
bipartite graphs via random equitable tripartitions: parts (V1, V2, V3),
edge v1-v2 with color v3 for every transversal triple.  Linearity makes the
auxiliary graph simple and its coloring proper.  A rainbow cycle v_1...v_m
with step colors c_1...c_m lifts to the loose cycle with triples
{v_i, v_{i+1}, c_i}.  Auxiliary graphs are bipartite, so only loose cycles
with an even number of triples (at least 4) can ever be produced; a NONE
answer is one-sided and never claims that the system has no loose cycle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import PartitionFailure, WorkCapExceeded
from .graph_core import Bipartition, ColoredGraph, LinearTripleSystem
from .walks import DEFAULT_WORK_CAP


@dataclass(frozen=True)
class CycleCertificate:
    """A rainbow cycle: distinct vertices, cyclically adjacent, distinct colors.

    ``colors[i]`` is the color of the step from vertices[i] to
    vertices[(i+1) % len].
    """

    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_document(self) -> dict:
        return {"cycle": list(self.vertices), "colors": list(self.colors)}


def certify(graph: ColoredGraph, cert: CycleCertificate) -> tuple[bool, str]:
    """Independently re-check a certificate against the graph.

    Uses only adjacency and color lookups, no search state.  Returns
    (True, "ok") or (False, reason naming the first defect).
    """
    vs = cert.vertices
    m = len(vs)
    if m < 3:
        return False, f"cycle length {m} is below 3"
    if len(cert.colors) != m:
        return False, "color list length does not match the vertex list"
    if any(not (0 <= v < graph.n) for v in vs):
        return False, "vertex id out of range"
    if len(set(vs)) != m:
        return False, "repeated vertex"
    for i in range(m):
        a, b = vs[i], vs[(i + 1) % m]
        if not graph.has_edge(a, b):
            return False, f"missing edge {a}-{b}"
        if graph.color(a, b) != cert.colors[i]:
            return False, f"edge {a}-{b} has color {graph.color(a, b)}, certificate says {cert.colors[i]}"
    if len(set(cert.colors)) != m:
        return False, "repeated color"
    return True, "ok"


def _search_exact_length(
    graph: ColoredGraph, length: int, work_cap: int, steps_used: list[int]
) -> Optional[CycleCertificate]:
    n = graph.n
    adj = [graph.neighbor_items(v) for v in range(n)]

    def extend(start: int, path: list[int], on_path: set[int], used: set[int]) -> Optional[tuple]:
        v = path[-1]
        if len(path) == length:
            if graph.has_edge(v, start):
                c = graph.color(v, start)
                if c not in used:
                    return tuple(path), c
            return None
        for (w, c) in adj[v]:
            if w <= start or w in on_path or c in used:
                continue
            steps_used[0] += 1
            if steps_used[0] > work_cap:
                raise WorkCapExceeded(
                    f"rainbow search exceeded cap {work_cap}",
                    estimate=steps_used[0],
                    cap=work_cap,
                )
            path.append(w)
            on_path.add(w)
            used.add(c)
            hit = extend(start, path, on_path, used)
            used.remove(c)
            on_path.remove(w)
            path.pop()
            if hit is not None:
                return hit
        return None

    for start in range(n):
        hit = extend(start, [start], {start}, set())
        if hit is not None:
            vs, closing = hit
            colors = tuple(graph.color(vs[i], vs[i + 1]) for i in range(length - 1)) + (closing,)
            return CycleCertificate(vertices=vs, colors=colors)
    return None


def find_rainbow_cycle(
    graph: ColoredGraph, length: Optional[int] = None, work_cap: int = DEFAULT_WORK_CAP
) -> Optional[CycleCertificate]:
    """Exhaustive search for a rainbow cycle.

    With ``length``, returns a rainbow cycle of exactly that length or None.
    Without it, tries lengths 3, 4, ..., n in order and returns the first
    hit, so the answer is a shortest rainbow cycle.  The work cap counts
    actual extension steps across the whole call.
    """
    if length is not None and length < 3:
        raise ValueError("cycles have length at least 3")
    steps = [0]
    if length is not None:
        return _search_exact_length(graph, length, work_cap, steps)
    for L in range(3, graph.n + 1):
        hit = _search_exact_length(graph, L, work_cap, steps)
        if hit is not None:
            return hit
    return None


# -- loose cycles and the tripartite reduction --------------------------------


@dataclass(frozen=True)
class LooseCycle:
    """Cyclic triple sequence; consecutive triples share one link vertex.

    ``links[i]`` is the vertex shared by triples[i] and triples[(i+1) % m].
    Non-consecutive triples are disjoint and all links are distinct; the
    minimum length is 3 triples.
    """

    triples: tuple[tuple[int, int, int], ...]
    links: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.triples)

    def to_document(self) -> dict:
        return {"triples": [list(t) for t in self.triples], "links": list(self.links)}


def verify_loose_cycle(system: LinearTripleSystem, cycle: LooseCycle) -> tuple[bool, str]:
    """Check every loose-cycle invariant against the host system."""
    m = len(cycle.triples)
    if m < 3:
        return False, f"{m} triples is below the minimum of 3"
    if len(cycle.links) != m:
        return False, "link list length does not match the triple count"
    have = set(system.triples)
    norm = [tuple(sorted(t)) for t in cycle.triples]
    for t in norm:
        if t not in have:
            return False, f"triple {t} is not in the system"
    if len(set(norm)) != m:
        return False, "repeated triple"
    if len(set(cycle.links)) != m:
        return False, "repeated link vertex"
    for i in range(m):
        a = set(norm[i])
        b = set(norm[(i + 1) % m])
        shared = a & b
        if shared != {cycle.links[i]}:
            return False, (
                f"triples {i} and {(i + 1) % m} share {sorted(shared)}, "
                f"expected exactly the link {cycle.links[i]}"
            )
    for i in range(m):
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue  # cyclically consecutive
            if set(norm[i]) & set(norm[j]):
                return False, f"non-consecutive triples {i} and {j} intersect"
    return True, "ok"


def auxiliary_graph(
    system: LinearTripleSystem, parts: tuple[frozenset, frozenset, frozenset]
) -> tuple[ColoredGraph, tuple[int, ...], Bipartition]:
    """Colored bipartite graph of a tripartition's transversal triples.

    Vertices are V1 then V2 (relabeled, each side sorted ascending); a
    transversal triple contributes the edge between its V1 and V2 vertices,
    colored by its V3 vertex (original id).  Linearity of the system makes
    the graph simple and the coloring proper.  Returns the graph, the map
    new id -> original id, and the side tagging.
    """
    v1, v2, v3 = parts
    order = sorted(v1) + sorted(v2)
    index = {orig: i for i, orig in enumerate(order)}
    edges = []
    for t in system.triples:
        a = [x for x in t if x in v1]
        b = [x for x in t if x in v2]
        c = [x for x in t if x in v3]
        if len(a) == 1 and len(b) == 1 and len(c) == 1:
            edges.append((index[a[0]], index[b[0]], c[0]))
    graph = ColoredGraph.from_edges(len(order), edges)
    sides = Bipartition.from_left(len(order), range(len(v1)))
    return graph, tuple(order), sides


def equitable_tripartition(n: int, rng: random.Random) -> tuple[frozenset, frozenset, frozenset]:
    """Uniform random ordered tripartition with part sizes differing by <= 1."""
    perm = rng.sample(range(n), n)
    base, extra = divmod(n, 3)
    sizes = [base + (1 if i < extra else 0) for i in range(3)]
    a = frozenset(perm[: sizes[0]])
    b = frozenset(perm[sizes[0] : sizes[0] + sizes[1]])
    c = frozenset(perm[sizes[0] + sizes[1] :])
    return a, b, c


def transversal_count(system: LinearTripleSystem, parts) -> int:
    count = 0
    for t in system.triples:
        marks = {0: 0, 1: 0, 2: 0}
        for x in t:
            for pi, p in enumerate(parts):
                if x in p:
                    marks[pi] += 1
        if marks[0] == 1 and marks[1] == 1 and marks[2] == 1:
            count += 1
    return count


@dataclass(frozen=True)
class ReductionOutcome:
    """Result of the reduction pipeline; loose_cycle is None for a one-sided
    NONE answer.  The transcript records every attempt for audit."""

    loose_cycle: Optional[LooseCycle]
    transcript: tuple


def _lift_cycle(cert: CycleCertificate, vertex_map: tuple[int, ...]) -> LooseCycle:
    m = cert.length
    orig = [vertex_map[v] for v in cert.vertices]
    triples = tuple(
        tuple(sorted((orig[i], orig[(i + 1) % m], cert.colors[i]))) for i in range(m)
    )
    links = tuple(orig[(i + 1) % m] for i in range(m))
    return LooseCycle(triples=triples, links=links)


def loose_cycle_via_reduction(
    system: LinearTripleSystem,
    seed: int,
    retries: int = 100,
    work_cap: int = DEFAULT_WORK_CAP,
) -> ReductionOutcome:
    """Search for a loose cycle through random tripartite reductions.

    Draws up to ``retries`` seeded equitable tripartitions.  A draw is
    accepted when its transversal triple count reaches a ninth of the triple
    count (exact integer comparison); each accepted draw is tried under all
    three cyclic role rotations.  Raises PartitionFailure if no draw is ever
    accepted.  Returns the first verified lifted loose cycle, or a NONE
    outcome with the full transcript.
    """
    rng = random.Random(seed)
    m_total = system.triple_count
    transcript = []
    any_accepted = False
    for attempt in range(retries):
        parts = equitable_tripartition(system.n, rng)
        tcount = transversal_count(system, parts)
        accepted = 9 * tcount >= m_total
        entry = {
            "attempt": attempt,
            "part_sizes": [len(p) for p in parts],
            "transversal": tcount,
            "accepted": accepted,
            "rotations": [],
        }
        if accepted:
            any_accepted = True
            for rot in range(3):
                roles = (parts[rot], parts[(rot + 1) % 3], parts[(rot + 2) % 3])
                aux, vmap, _sides = auxiliary_graph(system, roles)
                cert = find_rainbow_cycle(aux, work_cap=work_cap)
                entry["rotations"].append(
                    {
                        "rotation": rot,
                        "aux_edges": aux.edge_count,
                        "found_length": cert.length if cert else None,
                    }
                )
                if cert is not None:
                    lifted = _lift_cycle(cert, vmap)
                    ok, reason = verify_loose_cycle(system, lifted)
                    if not ok:
                        raise AssertionError(f"lifted cycle failed verification: {reason}")
                    transcript.append(entry)
                    return ReductionOutcome(loose_cycle=lifted, transcript=tuple(transcript))
        transcript.append(entry)
    if not any_accepted:
        raise PartitionFailure(
            f"no tripartition reached the transversal threshold in {retries} attempts"
        )
    return ReductionOutcome(loose_cycle=None, transcript=tuple(transcript))
