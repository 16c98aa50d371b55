"""Closed-form symbolic defects of edge ideals of unicyclic graphs.

Write ``s = k(n+1) + r`` with ``0 <= r <= n``.  The defect vanishes for
``s <= n``, equals ``multichoose(2n+1+l, s-(n+1))`` for
``n+1 <= s <= 2n+1``, and beyond that satisfies

    sdefect(s) = |G_{s-(n+1)}| + sdefect(s - (n+1)),

where ``G_j`` is the set of minimal generators of ``I^j`` that are not
multiples of a generator of ``I^{j-(n+1)} * (c)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .covers import CoverCountTable
from .errors import NotUnicyclic
from .graph import CycleParams


def multichoose(a: int, b: int) -> int:
    """Number of size-``b`` multisets from ``a`` symbols; 0 for ``b < 0``."""
    if b < 0:
        return 0
    if a == 0:
        return 1 if b == 0 else 0
    return comb(a + b - 1, b)


@dataclass(frozen=True)
class SdefectReport:
    s: int
    k: int
    r: int
    script_g_value: int | None
    sdefect: int
    terms: tuple[int, ...]


def script_g(p: CycleParams, table: CoverCountTable, s: int) -> int:
    """``|G_{s-(n+1)}|`` for ``s >= n+1``."""
    n, l = p.n, p.l
    if s < n + 1:
        raise ValueError(f"script_g needs s >= n+1 = {n + 1}, got {s}")
    value = multichoose(2 * n + 1 + l, s - (n + 1))
    if s <= 2 * n + 1:
        return value
    return value - sum(
        table.d[n + 1 + j] * multichoose(n + 1 + j, s - 2 * (n + 1) - j)
        for j in range(n + l + 1)
    )


def sdefect_closed(p: CycleParams, table: CoverCountTable, s: int) -> SdefectReport:
    if not p.unicyclic:
        raise NotUnicyclic("closed-form symbolic defects need a unicyclic graph")
    if s < 1:
        raise ValueError("s must be positive")
    n = p.n
    k, r = divmod(s, n + 1)
    if s <= n:
        return SdefectReport(s=s, k=k, r=r, script_g_value=None, sdefect=0, terms=())
    head = script_g(p, table, s)
    if s <= 2 * n + 1:
        value = head
    else:
        value = head + sdefect_closed(p, table, s - (n + 1)).sdefect
    # expanded form: |G_{(k-1)(n+1)+r}| + ... + |G_r|
    terms = tuple(script_g(p, table, s - i * (n + 1)) for i in range(k))
    return SdefectReport(s=s, k=k, r=r, script_g_value=head, sdefect=value, terms=terms)


def sdefect_sequence(p: CycleParams, table: CoverCountTable, smax: int) -> list[SdefectReport]:
    return [sdefect_closed(p, table, s) for s in range(1, smax + 1)]
