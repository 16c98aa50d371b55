"""Graphs with a designated induced odd cycle.

The cycle always occupies vertex ids ``1..2n+1`` in cycle order, so the
cycle edges are ``e_j = {j, j+1}`` for ``j <= 2n`` and ``e_{2n+1} = {2n+1, 1}``.
Every other edge is a *tree edge*, whatever the global shape of the graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    Disconnected,
    DuplicateEdge,
    EvenCycle,
    GraphSyntaxError,
    NotInduced,
    TooLarge,
)
from .limits import DEFAULT_GUARDS, Guards

Edge = tuple[int, int]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class MarkedGraph:
    n: int
    tree_edges: tuple[Edge, ...]
    all_vertices: tuple[int, ...]
    unicyclic: bool

    @property
    def cycle_length(self) -> int:
        return 2 * self.n + 1

    @property
    def cycle_vertices(self) -> tuple[int, ...]:
        return tuple(range(1, 2 * self.n + 2))

    @property
    def cycle_edges(self) -> tuple[Edge, ...]:
        """``(e_1, ..., e_{2n+1})`` in label order (not sorted)."""
        m = self.cycle_length
        return tuple(_edge(j, j % m + 1) for j in range(1, m + 1))

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.cycle_edges + self.tree_edges

    def cycle_edge(self, j: int) -> Edge:
        """Cycle edge ``e_j`` with the label taken mod 2n+1 into 1..2n+1."""
        return self.cycle_edges[(j - 1) % self.cycle_length]

    def var_index(self) -> dict[int, int]:
        """Position of each vertex id in an exponent vector."""
        return {v: i for i, v in enumerate(self.all_vertices)}

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.all_vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def edge_label(self, edge: Edge) -> str:
        """``e_j`` for cycle edges, ``f_i`` for tree edges (sorted order)."""
        edge = _edge(*edge)
        if edge in self.cycle_edges:
            return f"e{self.cycle_edges.index(edge) + 1}"
        return f"f{self.tree_edges.index(edge) + 1}"


@dataclass(frozen=True)
class CycleParams:
    n: int
    l: int
    m: int
    roots: tuple[int, ...]
    root_degrees: tuple[int, ...]
    u: tuple[int, ...]
    unicyclic: bool = True


def _connected(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    vertices = list(vertices)
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _positive_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise GraphSyntaxError(f"{what} must be a positive integer, got {value!r}")
    return value


def build_graph(n: int, tree_edges: Iterable[Iterable[int]] = (), vertices: Iterable[int] | None = None) -> MarkedGraph:
    """Validate the pieces of a graph and return a :class:`MarkedGraph`."""
    n = _positive_int(n, "n")
    cycle = set(range(1, 2 * n + 2))
    seen: set[Edge] = set()
    for raw in tree_edges:
        pair = list(raw)
        if len(pair) != 2:
            raise GraphSyntaxError(f"edge {raw!r} must have exactly two endpoints")
        a = _positive_int(pair[0], "vertex id")
        b = _positive_int(pair[1], "vertex id")
        if a == b:
            raise GraphSyntaxError(f"loop at vertex {a}")
        e = _edge(a, b)
        if e in seen:
            raise DuplicateEdge(f"edge {list(e)} listed twice")
        if a in cycle and b in cycle:
            raise NotInduced(f"edge {list(e)} joins two cycle vertices")
        seen.add(e)

    endpoints = {v for e in seen for v in e}
    if vertices is None:
        verts = cycle | endpoints
    else:
        listed = [_positive_int(v, "vertex id") for v in vertices]
        if len(set(listed)) != len(listed):
            raise GraphSyntaxError("duplicate vertex id in 'vertices'")
        verts = set(listed)
        missing = (cycle | endpoints) - verts
        if missing:
            raise GraphSyntaxError(f"undeclared vertices {sorted(missing)}")

    edges = sorted(seen)
    cycle_edges = [_edge(j, j % (2 * n + 1) + 1) for j in range(1, 2 * n + 2)]
    if not _connected(sorted(verts), cycle_edges + edges):
        raise Disconnected("graph is not connected")
    unicyclic = len(cycle_edges) + len(edges) == len(verts)
    return MarkedGraph(n=n, tree_edges=tuple(edges), all_vertices=tuple(sorted(verts)), unicyclic=unicyclic)


def parse_graph(text: str) -> MarkedGraph:
    """Parse a JSON graph document.

    Accepted keys: ``n`` (required), ``tree_edges`` (default empty),
    ``vertices`` (optional explicit id list) and ``cycle_length``
    (optional; must equal ``2n+1``, an even value is rejected).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GraphSyntaxError("graph document must be a JSON object")
    unknown = set(doc) - {"n", "tree_edges", "vertices", "cycle_length"}
    if unknown:
        raise GraphSyntaxError(f"unknown keys {sorted(unknown)}")
    if "n" not in doc:
        raise GraphSyntaxError("missing required key 'n'")
    n = _positive_int(doc["n"], "n")
    if "cycle_length" in doc:
        length = _positive_int(doc["cycle_length"], "cycle_length")
        if length % 2 == 0:
            raise EvenCycle(f"cycle of even length {length}")
        if length != 2 * n + 1:
            raise GraphSyntaxError(f"cycle_length {length} disagrees with n={n}")
    edges = doc.get("tree_edges", [])
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise GraphSyntaxError("'tree_edges' must be a list of [a, b] pairs")
    vertices = doc.get("vertices")
    if vertices is not None and not isinstance(vertices, list):
        raise GraphSyntaxError("'vertices' must be a list of ids")
    return build_graph(n, edges, vertices)


def serialize_graph(g: MarkedGraph) -> str:
    doc = {
        "n": g.n,
        "tree_edges": [list(e) for e in g.tree_edges],
        "vertices": list(g.all_vertices),
    }
    return json.dumps(doc)


def cycle_params(g: MarkedGraph) -> CycleParams:
    cycle = set(g.cycle_vertices)
    degree = {v: 0 for v in g.cycle_vertices}
    for a, b in g.tree_edges:
        for v in (a, b):
            if v in cycle:
                degree[v] += 1
    roots = tuple(v for v in g.cycle_vertices if degree[v] > 0)
    l = len(g.tree_edges)
    ls = tuple(degree[v] for v in roots)
    return CycleParams(
        n=g.n,
        l=l,
        m=len(roots),
        roots=roots,
        root_degrees=ls,
        u=tuple(g.n - 1 + l - li for li in ls),
        unicyclic=g.unicyclic,
    )


def closed_nbhd_condition(g: MarkedGraph) -> bool:
    """True iff every vertex is on the cycle or adjacent to it."""
    cycle = set(g.cycle_vertices)
    near = set(cycle)
    for a, b in g.tree_edges:
        if a in cycle:
            near.add(b)
        if b in cycle:
            near.add(a)
    return near >= set(g.all_vertices)


def minimal_vertex_covers(g: MarkedGraph, guards: Guards = DEFAULT_GUARDS) -> tuple[frozenset[int], ...]:
    """All inclusion-minimal vertex covers, ordered by (size, sorted ids).

    A minimal vertex cover is the complement of a maximal independent
    set; those are enumerated by Bron-Kerbosch with pivoting on the
    complement graph.
    """
    if len(g.all_vertices) > guards.cover_max_vertices:
        raise TooLarge(f"{len(g.all_vertices)} vertices exceeds cover guard {guards.cover_max_vertices}")
    adj = g.adjacency()
    verts = frozenset(g.all_vertices)
    # non-neighbours: candidates that stay independent together
    free = {v: verts - adj[v] - {v} for v in verts}
    found: list[frozenset[int]] = []

    def expand(chosen: frozenset[int], cand: frozenset[int], excl: frozenset[int]) -> None:
        if not cand and not excl:
            found.append(verts - chosen)
            return
        pivot = max(cand | excl, key=lambda v: len(cand & free[v]))
        for v in sorted(cand - free[pivot]):
            expand(chosen | {v}, cand & free[v], excl & free[v])
            cand = cand - {v}
            excl = excl | {v}

    expand(frozenset(), verts, frozenset())
    return tuple(sorted(found, key=lambda c: (len(c), sorted(c))))
