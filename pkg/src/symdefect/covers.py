"""Minimum edge covers of the marked odd cycle and the counts built on them.

A Type-I cover lives inside the cycle: the near-perfect matching
``M_j = {e_{j+1}, e_{j+3}, ..., e_{j+2n-1}}`` that misses ``x_j`` plus one
cycle edge at ``x_j``.  A Type-II cover closes ``M_j`` with a non-cycle
edge at ``x_j`` instead.  ``d'``, ``d''`` and ``d`` count edge sets of each
size containing a Type-I cover, a Type-II but no Type-I cover, and any
cover respectively.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import TooLarge
from .graph import CycleParams, Edge, MarkedGraph
from .limits import DEFAULT_GUARDS, Guards


class CoverKind(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"


@dataclass(frozen=True)
class MinCover:
    kind: CoverKind
    edges: frozenset[Edge]
    base_vertex: int
    attached_edge: Edge | None = None


@dataclass(frozen=True)
class CoverCountTable:
    n: int
    l: int
    d_prime: dict[int, int]
    d_double_prime: dict[int, int]
    d: dict[int, int]

    def sizes(self) -> range:
        return range(self.n + 1, 2 * self.n + 2 + self.l)


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero when ``b < 0`` or ``b > a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def near_perfect_matching(g: MarkedGraph, j: int) -> frozenset[Edge]:
    """The unique maximum matching of the cycle leaving ``x_j`` unsaturated."""
    return frozenset(g.cycle_edge(j + 1 + 2 * i) for i in range(g.n))


def enumerate_min_covers(g: MarkedGraph) -> tuple[MinCover, ...]:
    """Type-I covers ``E_1..E_{2n+1}`` then Type-II covers by root and edge."""
    out = []
    for j in g.cycle_vertices:
        out.append(MinCover(CoverKind.TYPE_I, near_perfect_matching(g, j) | {g.cycle_edge(j)}, j))
    for j in g.cycle_vertices:
        matching = near_perfect_matching(g, j)
        for f in g.tree_edges:
            if j in f:
                out.append(MinCover(CoverKind.TYPE_II, matching | {f}, j, f))
    return tuple(out)


def type1_counts(p: CycleParams) -> dict[int, int]:
    """``d'`` keyed by edge-set size ``n+1 .. 2n+1+l``."""
    n, l = p.n, p.l
    out = {}
    for k in range(n):
        out[n + 1 + k] = (2 * n + 1) * binom(n - 1 + l, k)
    for k in range(l):
        out[2 * n + 1 + k] = (2 * n + 1) * binom(n - 1 + l, n + k) + binom(l, k)
    out[2 * n + 1 + l] = 1
    return out


def type2_counts(p: CycleParams) -> dict[int, int]:
    """``d''`` keyed by edge-set size ``n+1 .. 2n-1+l``."""
    n, l = p.n, p.l
    out = {}
    for k in range(1, n + l):
        out[n + k] = sum(
            binom(li, j) * binom(ui, k - j)
            for li, ui in zip(p.root_degrees, p.u)
            for j in range(1, li + 1)
        )
    return out


def combined_counts(p: CycleParams) -> CoverCountTable:
    d1 = type1_counts(p)
    d2 = type2_counts(p)
    d = {size: d1[size] + d2.get(size, 0) for size in d1}
    return CoverCountTable(n=p.n, l=p.l, d_prime=d1, d_double_prime=d2, d=d)


def brute_count(g: MarkedGraph, size: int, guards: Guards = DEFAULT_GUARDS) -> int:
    """Edge subsets of ``size`` edges that contain some minimum cover."""
    edges = g.edges
    if len(edges) > guards.brute_max_edges:
        raise TooLarge(f"{len(edges)} edges exceeds brute-force guard {guards.brute_max_edges}")
    bit = {e: 1 << i for i, e in enumerate(edges)}
    cover_masks = [sum(bit[e] for e in c.edges) for c in enumerate_min_covers(g)]
    total = 0
    for subset in combinations(range(len(edges)), size):
        mask = 0
        for i in subset:
            mask |= 1 << i
        if any(cm & mask == cm for cm in cover_masks):
            total += 1
    return total
