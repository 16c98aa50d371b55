"""Hilbert function of ``I^(s)/I^s`` and the annihilating power of ``m``.

Both closed forms hold exactly when every vertex lies in the closed
neighbourhood of the cycle; otherwise no power of ``m`` kills the
quotient and the Hilbert function is left to the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .covers import binom
from .errors import ConditionFails
from .graph import CycleParams


@dataclass(frozen=True)
class HilbertTable:
    s: int
    k: int
    support: tuple[int, int]
    values: dict[int, int] = field(default_factory=dict)
    condition_holds: bool = True

    def __call__(self, d: int) -> int:
        return self.values.get(d, 0)

    def total(self) -> int:
        return sum(self.values.values())


def hilbert_closed(p: CycleParams, s: int, condition: bool) -> HilbertTable:
    """``h(2s-k+i) = C(2n+l+s-(k-i)(n+1), s-(k-i)(n+1))`` for ``0 <= i < k``.

    ``support`` is the closed degree range ``(2s-k, 2s-1)``; it is empty
    (lower end above upper end) when ``k = 0``.
    """
    if not condition:
        raise ConditionFails("a vertex lies outside N[V(C)]; use the oracle")
    if s < 1:
        raise ValueError("s must be positive")
    n, l = p.n, p.l
    k = s // (n + 1)
    values = {}
    for i in range(k):
        j = s - (k - i) * (n + 1)
        values[2 * s - k + i] = binom(2 * n + l + j, j)
    return HilbertTable(s=s, k=k, support=(2 * s - k, 2 * s - 1), values=values, condition_holds=True)


def gamma_closed(p: CycleParams, s: int, condition: bool) -> int | None:
    """Least ``gamma`` with ``m^gamma I^(s)`` inside ``I^s``, or ``None``.

    For ``s <= n`` the quotient is zero and the answer is 0 regardless
    of the neighbourhood condition.
    """
    k = s // (p.n + 1)
    if k == 0:
        return 0
    return k if condition else None
