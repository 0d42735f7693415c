"""Colored-graph data model, validation, degree statistics, and JSON I/O.

A colored graph is a finite simple undirected graph on vertices 0..n-1
together with a proper edge coloring: any two edges sharing a vertex carry
distinct colors.  Colors are arbitrary non-negative integers and need not be
contiguous.

A linear triple system is a 3-uniform hypergraph on 0..n-1 in which any two
triples share at most one vertex.

Canonical on-disk documents (the only formats other modules consume or emit):

    graph:       {"n": int, "edges": [[u, v, color], ...]}   with u < v
    hypergraph:  {"n": int, "triples": [[a, b, c], ...]}     with a < b < c

Serialization is canonical: edges and triples are emitted sorted, so
``loads(dumps(g)) == g`` and equal objects produce byte-identical documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import BipartitionError, EmptyGraph, InvariantError, ParseError

Rational = Union[int, Fraction]

LEFT = "LEFT"
RIGHT = "RIGHT"


class Edge(NamedTuple):
    u: int
    v: int
    color: int


@dataclass(frozen=True)
class Violation:
    """One structural defect found by validation.

    kind is one of: "vertex_range", "color_range", "loop", "duplicate_edge",
    "improper_color", "triple_range", "duplicate_vertex", "pair_reuse".
    ``where`` holds the offending ids (edge, vertex, or triple).
    """

    kind: str
    detail: str
    where: tuple


def _as_int(x) -> int:
    # bool is an int subclass; reject it to keep documents unambiguous
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"expected an integer, got {x!r}")
    return x


def validate_edge_list(n: int, edges: Sequence[tuple[int, int, int]]) -> list[Violation]:
    """Check a raw edge list against all colored-graph invariants.

    Returns every violation found (empty list iff the data is a valid
    properly colored simple graph on 0..n-1).  The list order is
    deterministic: range/loop defects in input order, then duplicate pairs,
    then one properness defect per (vertex, color) clash.
    """
    out: list[Violation] = []
    seen_pairs: set[tuple[int, int]] = set()
    at_vertex: dict[tuple[int, int], tuple[int, int]] = {}
    for (u, v, c) in edges:
        if not (0 <= u < n and 0 <= v < n):
            out.append(Violation("vertex_range", f"edge endpoint outside 0..{n - 1}", (u, v, c)))
            continue
        if c < 0:
            out.append(Violation("color_range", "negative color", (u, v, c)))
            continue
        if u == v:
            out.append(Violation("loop", "edge joins a vertex to itself", (u, v, c)))
            continue
        a, b = (u, v) if u < v else (v, u)
        if (a, b) in seen_pairs:
            out.append(Violation("duplicate_edge", "vertex pair listed twice", (a, b)))
            continue
        seen_pairs.add((a, b))
        for x, y in ((a, b), (b, a)):
            key = (x, c)
            if key in at_vertex:
                out.append(
                    Violation(
                        "improper_color",
                        f"vertex {x} has two incident edges of color {c}",
                        (x, at_vertex[key], (a, b)),
                    )
                )
            else:
                at_vertex[key] = (a, b)
    return out


@dataclass(frozen=True)
class ColoredGraph:
    """Immutable properly edge-colored simple graph on vertices 0..n-1.

    ``edges`` is the canonical sorted tuple of Edge(u, v, color) with u < v.
    Adjacency is precomputed at construction; instances are safe to share
    freely (all operations on them are pure).
    """

    n: int
    edges: tuple[Edge, ...]
    _adj: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False, default=()
    )
    _colors: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        colors: dict[tuple[int, int], int] = {}
        for e in self.edges:
            adj[e.u].append((e.v, e.color))
            adj[e.v].append((e.u, e.color))
            colors[(e.u, e.v)] = e.color
            colors[(e.v, e.u)] = e.color
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_colors", colors)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "ColoredGraph":
        """Build a graph from (u, v, color) items, normalizing endpoint order.

        Raises InvariantError naming the first violation if the data is not a
        valid properly colored simple graph.
        """
        if n < 0:
            raise InvariantError("vertex count must be non-negative")
        norm = []
        for item in edges:
            u, v, c = int(item[0]), int(item[1]), int(item[2])
            if u > v:
                u, v = v, u
            norm.append((u, v, c))
        norm.sort()
        bad = validate_edge_list(n, norm)
        if bad:
            first = bad[0]
            raise InvariantError(f"{first.kind}: {first.detail} at {first.where}")
        return cls(n=n, edges=tuple(Edge(*e) for e in norm))

    # -- queries ------------------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for (w, _) in self._adj[v])

    def neighbor_items(self, v: int) -> tuple[tuple[int, int], ...]:
        """Sorted (neighbor, color) pairs at v."""
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._colors

    def color(self, u: int, v: int) -> int:
        try:
            return self._colors[(u, v)]
        except KeyError:
            raise InvariantError(f"no edge {u}-{v}") from None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    # -- documents ----------------------------------------------------------

    def to_document(self) -> dict:
        return {"n": self.n, "edges": [[e.u, e.v, e.color] for e in self.edges]}


def validate(graph: ColoredGraph) -> list[Violation]:
    """Re-check a constructed graph; empty list iff valid."""
    return validate_edge_list(graph.n, [tuple(e) for e in graph.edges])


def induced_subgraph(graph: ColoredGraph, vertices: Iterable[int]) -> tuple[ColoredGraph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``, relabeled to 0..len-1.

    Returns (subgraph, vertex_map) where vertex_map[new_id] is the original
    id; vertex_map is sorted ascending.
    """
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    kept_edges = [
        (index[e.u], index[e.v], e.color)
        for e in graph.edges
        if e.u in index and e.v in index
    ]
    return ColoredGraph.from_edges(len(keep), kept_edges), tuple(keep)


# -- bipartitions ------------------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    """A two-sided vertex tagging; every edge must join LEFT to RIGHT."""

    left: frozenset
    right: frozenset

    @classmethod
    def from_left(cls, n: int, left: Iterable[int]) -> "Bipartition":
        lset = frozenset(left)
        stray = [v for v in lset if not (0 <= v < n)]
        if stray:
            raise BipartitionError(f"left-side vertex {min(stray)} outside 0..{n - 1}")
        return cls(left=lset, right=frozenset(range(n)) - lset)

    def side(self, v: int) -> str:
        if v in self.left:
            return LEFT
        if v in self.right:
            return RIGHT
        raise BipartitionError(f"vertex {v} is not tagged")

    def check(self, graph: ColoredGraph) -> None:
        """Raise BipartitionError unless the tagging is a valid bipartition."""
        if self.left & self.right:
            raise BipartitionError("sides overlap")
        if self.left | self.right != frozenset(range(graph.n)):
            raise BipartitionError("sides do not cover the vertex set")
        for e in graph.edges:
            if (e.u in self.left) == (e.v in self.left):
                raise BipartitionError(f"edge {e.u}-{e.v} does not cross the sides")


@dataclass(frozen=True)
class DegreeStats:
    """Exact degree statistics; averages are Fractions, power sums integers."""

    k: int
    min_degree: int
    max_degree: int
    avg_degree: Fraction
    power_sum: int
    left_avg: Optional[Fraction] = None
    right_avg: Optional[Fraction] = None


def degree_profile(graph: ColoredGraph, k: int, side: Optional[Bipartition] = None) -> DegreeStats:
    """Min/max/average degree and the exact power sum sum_v d(v)^k.

    With a bipartition, also the per-side average degrees (None for an empty
    side).  Raises EmptyGraph for n = 0 and BipartitionError for a bad tag.
    """
    if graph.n == 0:
        raise EmptyGraph("degree profile needs at least one vertex")
    if k < 0:
        raise ValueError("power k must be non-negative")
    degs = graph.degrees()
    left_avg = right_avg = None
    if side is not None:
        side.check(graph)
        if side.left:
            left_avg = Fraction(sum(degs[v] for v in side.left), len(side.left))
        if side.right:
            right_avg = Fraction(sum(degs[v] for v in side.right), len(side.right))
    return DegreeStats(
        k=k,
        min_degree=min(degs),
        max_degree=max(degs),
        avg_degree=Fraction(sum(degs), graph.n),
        power_sum=sum(d**k for d in degs),
        left_avg=left_avg,
        right_avg=right_avg,
    )


# -- linear triple systems ----------------------------------------------------


def validate_triple_list(n: int, triples: Sequence[tuple[int, int, int]]) -> list[Violation]:
    """Check raw triples for range, distinctness, and linearity defects."""
    out: list[Violation] = []
    pair_owner: dict[tuple[int, int], tuple[int, int, int]] = {}
    for t in triples:
        a, b, c = t
        if not all(0 <= x < n for x in (a, b, c)):
            out.append(Violation("triple_range", f"vertex outside 0..{n - 1}", t))
            continue
        if len({a, b, c}) != 3:
            out.append(Violation("duplicate_vertex", "triple has a repeated vertex", t))
            continue
        key = tuple(sorted((a, b, c)))
        clash = None
        for pair in ((key[0], key[1]), (key[0], key[2]), (key[1], key[2])):
            if pair in pair_owner and pair_owner[pair] != key:
                clash = (pair, pair_owner[pair])
                break
        if clash is not None:
            out.append(
                Violation(
                    "pair_reuse",
                    f"pair {clash[0]} already covered by {clash[1]}",
                    key,
                )
            )
            continue
        if (key[0], key[1]) in pair_owner and pair_owner[(key[0], key[1])] == key:
            out.append(Violation("duplicate_triple", "triple listed twice", key))
            continue
        for pair in ((key[0], key[1]), (key[0], key[2]), (key[1], key[2])):
            pair_owner[pair] = key
    return out


@dataclass(frozen=True)
class LinearTripleSystem:
    """3-uniform hypergraph on 0..n-1; any two triples share at most one vertex."""

    n: int
    triples: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[Sequence[int]]) -> "LinearTripleSystem":
        norm = sorted(tuple(sorted(int(x) for x in t)) for t in triples)
        bad = validate_triple_list(n, norm)
        if bad:
            first = bad[0]
            raise InvariantError(f"{first.kind}: {first.detail} at {first.where}")
        return cls(n=n, triples=tuple(norm))

    @property
    def triple_count(self) -> int:
        return len(self.triples)

    def to_document(self) -> dict:
        return {"n": self.n, "triples": [list(t) for t in self.triples]}


# -- JSON I/O -----------------------------------------------------------------


def _load_document(text: Union[str, bytes]) -> dict:
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError, TypeError) as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level document must be a JSON object")
    return doc


def loads_graph(text: Union[str, bytes]) -> ColoredGraph:
    """Parse a canonical graph document; ParseError on malformed input,
    InvariantError naming the first offending edge on invalid graphs."""
    doc = _load_document(text)
    if set(doc) != {"n", "edges"}:
        raise ParseError('graph document must have exactly the keys "n" and "edges"')
    n = _as_int(doc["n"])
    if n < 0:
        raise ParseError("n must be non-negative")
    raw = doc["edges"]
    if not isinstance(raw, list):
        raise ParseError('"edges" must be a list')
    edges = []
    for item in raw:
        if not (isinstance(item, list) and len(item) == 3):
            raise ParseError(f"edge entry must be [u, v, color], got {item!r}")
        edges.append(tuple(_as_int(x) for x in item))
    return ColoredGraph.from_edges(n, edges)


def dumps_graph(graph: ColoredGraph) -> str:
    return json.dumps(graph.to_document(), sort_keys=True, separators=(",", ":")) + "\n"


def loads_triples(text: Union[str, bytes]) -> LinearTripleSystem:
    doc = _load_document(text)
    if set(doc) != {"n", "triples"}:
        raise ParseError('hypergraph document must have exactly the keys "n" and "triples"')
    n = _as_int(doc["n"])
    if n < 0:
        raise ParseError("n must be non-negative")
    raw = doc["triples"]
    if not isinstance(raw, list):
        raise ParseError('"triples" must be a list')
    triples = []
    for item in raw:
        if not (isinstance(item, list) and len(item) == 3):
            raise ParseError(f"triple entry must be [a, b, c], got {item!r}")
        triples.append(tuple(_as_int(x) for x in item))
    return LinearTripleSystem.from_triples(n, triples)


def dumps_triples(system: LinearTripleSystem) -> str:
    return json.dumps(system.to_document(), sort_keys=True, separators=(",", ":")) + "\n"


def read_graph(path) -> ColoredGraph:
    with open(path, "rb") as fh:
        return loads_graph(fh.read())


def write_graph(graph: ColoredGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_graph(graph))


def read_triples(path) -> LinearTripleSystem:
    with open(path, "rb") as fh:
        return loads_triples(fh.read())


def write_triples(system: LinearTripleSystem, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_triples(system))
