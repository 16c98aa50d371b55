"""Exact monomial and monomial-ideal arithmetic.

Monomials are exponent tuples.  Ideals are stored by their unique
minimal generating set in canonical order (degree, then lexicographic
on the exponent tuple), so equality of ideals is equality of values.
The zero ideal has no generators; the unit ideal is generated by the
all-zero monomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Iterator

from .errors import DimensionMismatch, TooLarge
from .limits import DEFAULT_GUARDS, Guards


class Monomial(tuple):
    """Exponent vector; ``*`` multiplies, it does not repeat the tuple."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int] = ()):
        return super().__new__(cls, exponents)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def nvars(self) -> int:
        return len(self)

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        return Monomial(a + b for a, b in zip(self, other))

    __rmul__ = __mul__

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self, other))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self, other))

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self) if a)

    def __repr__(self) -> str:
        return f"Monomial({tuple(self)})"

    def pretty(self, names: Iterable[str] | None = None) -> str:
        names = list(names) if names is not None else [f"x{i + 1}" for i in range(len(self))]
        parts = [n if a == 1 else f"{n}^{a}" for n, a in zip(names, self) if a]
        return "*".join(parts) or "1"


def one(nvars: int) -> Monomial:
    return Monomial((0,) * nvars)


def variable(i: int, nvars: int) -> Monomial:
    return Monomial(1 if j == i else 0 for j in range(nvars))


def _canonical_key(m: tuple[int, ...]):
    return (sum(m), tuple(m))


def _mask(m: tuple[int, ...]) -> int:
    bits = 0
    for i, a in enumerate(m):
        if a:
            bits |= 1 << i
    return bits


@dataclass(frozen=True)
class MonomialIdeal:
    gens: tuple[Monomial, ...]
    nvars: int = field(compare=True)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __contains__(self, f) -> bool:
        return contains(self, f)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @cached_property
    def _index(self) -> "_DivisorIndex":
        index = _DivisorIndex()
        for g in self.gens:
            index.add(g)
        return index

    @property
    def min_degree(self) -> int | None:
        return self.gens[0].degree if self.gens else None

    def to_json(self) -> list[list[int]]:
        return [list(g) for g in self.gens]


def zero_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal((), nvars)


def unit_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal((one(nvars),), nvars)


class _DivisorIndex:
    """Set of monomials answering "does any member divide f?".

    Members are bucketed by degree; per bucket it either scans (with a
    support-mask prefilter) or enumerates the divisors of ``f`` of that
    degree and looks them up, whichever touches fewer monomials.
    """

    def __init__(self) -> None:
        self.buckets: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
        self.sets: dict[int, set[tuple[int, ...]]] = {}

    def add(self, g: tuple[int, ...]) -> None:
        d = sum(g)
        self.buckets.setdefault(d, []).append((_mask(g), g))
        self.sets.setdefault(d, set()).add(g)

    def has_divisor(self, f: tuple[int, ...]) -> bool:
        df = sum(f)
        fm = _mask(f)
        width = None
        for d, bucket in self.buckets.items():
            if d > df:
                continue
            if len(bucket) > 32:
                if width is None:
                    width = sum(1 for a in f if a)
                if count_monomials(width, df - d) < len(bucket):
                    members = self.sets[d]
                    if any(tuple(a - b for a, b in zip(f, q)) in members for q in _submonomials(f, df - d)):
                        return True
                    continue
            for gm, g in bucket:
                if gm & ~fm == 0 and all(a <= b for a, b in zip(g, f)):
                    return True
        return False


def minimalize(gens: Iterable[Iterable[int]], nvars: int) -> MonomialIdeal:
    """Reduce any generating set to the unique minimal one."""
    pool = {tuple(g) for g in gens}
    for g in pool:
        if len(g) != nvars:
            raise DimensionMismatch(f"monomial {g} has {len(g)} exponents, expected {nvars}")
    by_degree: dict[int, list[tuple[int, ...]]] = {}
    for g in pool:
        by_degree.setdefault(sum(g), []).append(g)
    index = _DivisorIndex()
    out: list[Monomial] = []
    for d in sorted(by_degree):
        # distinct monomials of equal degree never divide each other
        layer = [g for g in by_degree[d] if not index.has_divisor(g)]
        for g in layer:
            index.add(g)
        out.extend(Monomial(g) for g in layer)
    out.sort(key=_canonical_key)
    return MonomialIdeal(tuple(out), nvars)


def principal(f: Iterable[int]) -> MonomialIdeal:
    f = Monomial(f)
    return MonomialIdeal((f,), len(f))


def _check(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.nvars != J.nvars:
        raise DimensionMismatch(f"ambient dimensions differ: {I.nvars} vs {J.nvars}")


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check(I, J)
    return minimalize((tuple(a + b for a, b in zip(u, v)) for u in I.gens for v in J.gens), I.nvars)


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 0:
        raise ValueError("power exponent must be nonnegative")
    result = unit_ideal(I.nvars)
    for _ in range(s):
        result = product(result, I)
    return result


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    if not ideals:
        raise ValueError("ideal_sum needs at least one ideal")
    for J in ideals[1:]:
        _check(ideals[0], J)
    return minimalize((g for J in ideals for g in J.gens), ideals[0].nvars)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check(I, J)
    return minimalize((tuple(max(a, b) for a, b in zip(u, v)) for u in I.gens for v in J.gens), I.nvars)


def monomials_of_degree(nvars: int, d: int) -> Iterator[Monomial]:
    """All degree-``d`` monomials, in reverse-lex order of exponent tuples."""
    if d < 0:
        return
    if nvars == 0:
        if d == 0:
            yield Monomial(())
        return
    for combo in combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        yield Monomial(exps)


def count_monomials(nvars: int, d: int) -> int:
    if d < 0:
        return 0
    if nvars == 0:
        return 1 if d == 0 else 0
    return comb(nvars + d - 1, d)


def _submonomials(f: tuple[int, ...], e: int) -> Iterator[tuple[int, ...]]:
    """Monomials of degree ``e`` dividing ``f``."""
    n = len(f)
    out = [0] * n
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + f[i]

    def rec(i: int, left: int):
        if left == 0:
            yield tuple(out)
            return
        if i == n or suffix[i] < left:
            return
        for a in range(min(f[i], left), -1, -1):
            out[i] = a
            yield from rec(i + 1, left - a)
        out[i] = 0

    yield from rec(0, e)


def contains(I: MonomialIdeal, f: Iterable[int]) -> bool:
    """True iff some minimal generator of ``I`` divides ``f``."""
    f = tuple(f)
    if len(f) != I.nvars:
        raise DimensionMismatch(f"monomial has {len(f)} exponents, ideal has {I.nvars} variables")
    return I._index.has_divisor(f)


def degree_slice_dim(I: MonomialIdeal, d: int, guards: Guards = DEFAULT_GUARDS) -> int:
    """Number of degree-``d`` monomials lying in ``I``.

    Either every degree-``d`` monomial is tested for membership, or the
    degree-``d`` multiples of each generator are collected; whichever
    enumeration is smaller is used.  Both are exhaustive and exact.
    """
    if d < 0 or not I.gens or d < I.gens[0].degree:
        return 0
    full = count_monomials(I.nvars, d)
    multiples = sum(count_monomials(I.nvars, d - g.degree) for g in I.gens if g.degree <= d)
    if min(full, multiples) > guards.max_enumeration:
        raise TooLarge(f"degree-{d} slice needs {min(full, multiples)} monomials")
    if full <= multiples:
        return sum(1 for f in monomials_of_degree(I.nvars, d) if contains(I, f))
    seen: set[tuple[int, ...]] = set()
    for g in I.gens:
        if g.degree > d:
            break
        for w in monomials_of_degree(I.nvars, d - g.degree):
            seen.add(tuple(a + b for a, b in zip(g, w)))
    return len(seen)


def ideal_times_max_power_in(I: MonomialIdeal, gamma: int, J: MonomialIdeal, guards: Guards = DEFAULT_GUARDS) -> bool:
    """Whether ``m^gamma * I`` is contained in ``J``, ``m`` the maximal ideal."""
    _check(I, J)
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    if count_monomials(I.nvars, gamma) > guards.max_enumeration:
        raise TooLarge(f"{count_monomials(I.nvars, gamma)} monomials of degree {gamma}")
    words = list(monomials_of_degree(I.nvars, gamma))
    for u in I.gens:
        if contains(J, u):
            continue
        for w in words:
            if not contains(J, u * w):
                return False
    return True
