"""Edge ideals, their ordinary and symbolic powers, and brute-force oracles.

The ``*_oracle`` functions never use the closed forms: symbolic powers
come from intersecting powers of vertex-cover primes, and everything
else is counted directly from those ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable

import numpy as np

from .errors import NotUnicyclic, TooLarge
from .graph import Edge, MarkedGraph, minimal_vertex_covers
from .limits import DEFAULT_GUARDS, Guards
from .monomials import (
    Monomial,
    MonomialIdeal,
    contains,
    count_monomials,
    degree_slice_dim,
    ideal_sum,
    ideal_times_max_power_in,
    minimalize,
    principal,
    product,
    unit_ideal,
)


def edge_monomial(g: MarkedGraph, edge: Edge) -> Monomial:
    idx = g.var_index()
    exps = [0] * len(g.all_vertices)
    for v in edge:
        exps[idx[v]] += 1
    return Monomial(exps)


def edge_ideal(g: MarkedGraph) -> MonomialIdeal:
    return minimalize((edge_monomial(g, e) for e in g.edges), len(g.all_vertices))


def cycle_product(g: MarkedGraph) -> Monomial:
    """``c = x_1 ... x_{2n+1}``."""
    idx = g.var_index()
    exps = [0] * len(g.all_vertices)
    for v in g.cycle_vertices:
        exps[idx[v]] = 1
    return Monomial(exps)


def _require_unicyclic(g: MarkedGraph) -> None:
    if not g.unicyclic:
        raise NotUnicyclic("operation requires a connected graph whose only cycle is the marked one")


def _power_guard(g: MarkedGraph, s: int, guards: Guards) -> None:
    if count_monomials(len(g.edges), s) > guards.max_enumeration:
        raise TooLarge(f"I^{s} has too many candidate generators")


@lru_cache(maxsize=128)
def _ordinary_power(g: MarkedGraph, s: int) -> MonomialIdeal:
    if s == 0:
        return unit_ideal(len(g.all_vertices))
    if s == 1:
        return edge_ideal(g)
    return product(_ordinary_power(g, s - 1), edge_ideal(g))


def ordinary_power(g: MarkedGraph, s: int, guards: Guards = DEFAULT_GUARDS) -> MonomialIdeal:
    """Minimal generators of ``I(G)^s`` (``s = 0`` gives the unit ideal)."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    _power_guard(g, s, guards)
    return _ordinary_power(g, s)


@dataclass(frozen=True)
class SymbolicPowerDecomposition:
    s: int
    k: int
    r: int
    summands: tuple[tuple[int, MonomialIdeal], ...]
    total: MonomialIdeal


def split(s: int, n: int) -> tuple[int, int]:
    """``(k, r)`` with ``s = k(n+1) + r`` and ``0 <= r <= n``."""
    return divmod(s, n + 1)


def symbolic_power_formula(g: MarkedGraph, s: int, guards: Guards = DEFAULT_GUARDS) -> SymbolicPowerDecomposition:
    """``I^(s)`` as the sum over t of ``I^{s-t(n+1)} * c^t``."""
    _require_unicyclic(g)
    if s < 1:
        raise ValueError("s must be positive")
    k, r = split(s, g.n)
    c = cycle_product(g)
    summands = []
    for t in range(k + 1):
        base = ordinary_power(g, s - t * (g.n + 1), guards)
        ct = Monomial(a * t for a in c)
        summands.append((t, product(base, principal(ct))))
    total = ideal_sum(*(J for _, J in summands))
    return SymbolicPowerDecomposition(s=s, k=k, r=r, summands=tuple(summands), total=total)


def prime_power(cover: Iterable[int], g: MarkedGraph, s: int) -> MonomialIdeal:
    """``P_C^s``: all degree-``s`` monomials in the cover's variables."""
    idx = g.var_index()
    pos = sorted(idx[v] for v in cover)
    nv = len(g.all_vertices)
    gens = []
    for combo in combinations_with_replacement(pos, s):
        exps = [0] * nv
        for i in combo:
            exps[i] += 1
        gens.append(exps)
    return minimalize(gens, nv)


def _oracle_guard(g: MarkedGraph, s: int, guards: Guards) -> None:
    if len(g.all_vertices) > guards.oracle_max_vertices:
        raise TooLarge(f"{len(g.all_vertices)} vertices exceeds oracle guard {guards.oracle_max_vertices}")
    if s > guards.oracle_max_s:
        raise TooLarge(f"s={s} exceeds oracle guard {guards.oracle_max_s}")


def _degree_vectors(nvars: int, d: int) -> np.ndarray:
    rows = []
    for combo in combinations_with_replacement(range(nvars), d):
        row = [0] * nvars
        for i in combo:
            row[i] += 1
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(-1, nvars)


def _unique_rows(rows: np.ndarray, bound: int) -> np.ndarray:
    """Distinct rows of a matrix whose entries lie in ``0..bound``."""
    weights = (bound + 1) ** np.arange(rows.shape[1], dtype=np.int64)
    _, first = np.unique(rows @ weights, return_index=True)
    return rows[first]


@lru_cache(maxsize=128)
def _symbolic_oracle(g: MarkedGraph, s: int) -> MonomialIdeal:
    nv = len(g.all_vertices)
    idx = g.var_index()
    covers = [sorted(idx[v] for v in C) for C in minimal_vertex_covers(g)]
    gens = np.zeros((1, nv), dtype=np.int64)
    masks = np.zeros((nv, 0), dtype=np.int64)
    for cover in covers:
        # J ∩ P_C^s is generated by u*v, u in G(J), v of C-degree max(0, s - deg_C u)
        deficit = s - gens[:, cover].sum(axis=1)
        parts = [gens[deficit <= 0]]
        for delta in np.unique(deficit[deficit > 0]):
            rows = gens[deficit == delta]
            local = _degree_vectors(len(cover), int(delta))
            lift = np.zeros((len(local), nv), dtype=np.int64)
            lift[:, cover] = local
            parts.append((rows[:, None, :] + lift[None, :, :]).reshape(-1, nv))
        cand = _unique_rows(np.concatenate(parts), s)
        col = np.zeros((nv, 1), dtype=np.int64)
        col[cover, 0] = 1
        masks = np.hstack([masks, col])
        # every candidate lies in the new intersection; keep those with no
        # immediate divisor still inside it
        sums = cand @ masks
        redundant = np.zeros(len(cand), dtype=bool)
        for i in range(nv):
            redundant |= (cand[:, i] > 0) & ((sums - masks[i]) >= s).all(axis=1)
        gens = cand[~redundant]
    # rows are already the minimal generators; only canonical order is missing
    mons = sorted((Monomial(int(a) for a in row) for row in gens), key=lambda m: (m.degree, tuple(m)))
    return MonomialIdeal(tuple(mons), nv)


def symbolic_power_oracle(g: MarkedGraph, s: int, guards: Guards = DEFAULT_GUARDS) -> MonomialIdeal:
    """``I^(s)`` as the intersection of ``P_C^s`` over minimal vertex covers C."""
    if s < 1:
        raise ValueError("s must be positive")
    _oracle_guard(g, s, guards)
    return _symbolic_oracle(g, s)


def in_symbolic_power(g: MarkedGraph, f: Iterable[int], s: int) -> bool:
    """Membership in ``I^(s)``: every minimal cover carries exponent sum >= s."""
    f = tuple(f)
    idx = g.var_index()
    return all(sum(f[idx[v]] for v in C) >= s for C in minimal_vertex_covers(g))


def defect_generators(g: MarkedGraph, s: int, guards: Guards = DEFAULT_GUARDS) -> tuple[Monomial, ...]:
    """Minimal generators of ``I^(s)`` lying outside ``I^s``."""
    sym = symbolic_power_oracle(g, s, guards)
    ordinary = ordinary_power(g, s, guards)
    return tuple(u for u in sym.gens if not contains(ordinary, u))


def sdefect_oracle(g: MarkedGraph, s: int, guards: Guards = DEFAULT_GUARDS) -> int:
    """Number of minimal generators of ``I^(s)/I^s``.

    A minimal generator of the monomial ideal ``I^(s)`` is never in
    ``m I^(s)``, so it survives in the quotient's minimal generating set
    exactly when it is not already in ``I^s``.
    """
    return len(defect_generators(g, s, guards))


def hilbert_oracle(g: MarkedGraph, s: int, d: int, guards: Guards = DEFAULT_GUARDS) -> int:
    """``dim_k`` of the degree-``d`` piece of ``I^(s)/I^s``."""
    sym = symbolic_power_oracle(g, s, guards)
    ordinary = ordinary_power(g, s, guards)
    return degree_slice_dim(sym, d, guards) - degree_slice_dim(ordinary, d, guards)


def hilbert_oracle_table(g: MarkedGraph, s: int, dmax: int | None = None, guards: Guards = DEFAULT_GUARDS) -> dict[int, int]:
    """``{d: h(d)}`` for ``0 <= d <= dmax`` (default ``2s``)."""
    dmax = 2 * s if dmax is None else dmax
    return {d: hilbert_oracle(g, s, d, guards) for d in range(dmax + 1)}


def gamma_oracle(g: MarkedGraph, s: int, gamma_max: int, guards: Guards = DEFAULT_GUARDS) -> int | None:
    """Least ``gamma <= gamma_max`` with ``m^gamma I^(s)`` inside ``I^s``."""
    sym = symbolic_power_oracle(g, s, guards)
    ordinary = ordinary_power(g, s, guards)
    extra = MonomialIdeal(tuple(u for u in sym.gens if not contains(ordinary, u)), sym.nvars)
    for gamma in range(gamma_max + 1):
        if ideal_times_max_power_in(extra, gamma, ordinary, guards):
            return gamma
    return None


def edge_factorizations(g: MarkedGraph, f: Iterable[int], s: int, limit: int | None = None) -> list[tuple[Edge, ...]]:
    """Every multiset of ``s`` edges whose product is exactly ``f``.

    Exhaustive depth-first search over edges in label order, choosing a
    multiplicity for each; stops after ``limit`` hits if given.
    """
    f = list(f)
    idx = g.var_index()
    edges = list(g.edges)
    ends = [(idx[a], idx[b]) for a, b in edges]
    if sum(f) != 2 * s:
        return []
    found: list[tuple[Edge, ...]] = []
    chosen: list[Edge] = []

    def rec(i: int, left: int) -> bool:
        if left == 0:
            if not any(f):
                found.append(tuple(chosen))
                return limit is not None and len(found) >= limit
            return False
        if i == len(edges):
            return False
        a, b = ends[i]
        top = min(f[a], f[b], left)
        for mult in range(top, -1, -1):
            f[a] -= mult
            f[b] -= mult
            chosen.extend([edges[i]] * mult)
            stop = rec(i + 1, left - mult)
            del chosen[len(chosen) - mult:]
            f[a] += mult
            f[b] += mult
            if stop:
                return True
        return False

    rec(0, s)
    return found


def factor_into_edges(g: MarkedGraph, f: Iterable[int], s: int, guards: Guards = DEFAULT_GUARDS) -> tuple[Edge, ...] | None:
    """The unique edge multiset with product ``f`` if ``f`` is in ``G(I^s)``."""
    _require_unicyclic(g)
    f = Monomial(f)
    if f not in ordinary_power(g, s, guards).gens:
        return None
    hits = edge_factorizations(g, f, s)
    return hits[0] if len(hits) == 1 else None


def script_g_oracle(g: MarkedGraph, j: int, guards: Guards = DEFAULT_GUARDS) -> int:
    """Generators of ``I^j`` that are not multiples of ``G(I^{j-(n+1)} c)``.

    For ``j < n+1`` nothing is excluded.
    """
    gens = ordinary_power(g, j, guards).gens
    if j < g.n + 1:
        return len(gens)
    below = product(ordinary_power(g, j - g.n - 1, guards), principal(cycle_product(g)))
    return sum(1 for u in gens if not contains(below, u))
