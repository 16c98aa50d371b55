"""Exact quasi-polynomial recovery from an integer sequence.

For each residue ``r`` modulo the period, the values at ``s = k*period + r``
are treated as a sequence in ``k``.  The degree is the least ``D`` whose
``D``-th finite difference is constant over the last ``D+2`` points; the
polynomial is then interpolated through the last ``D+1`` points and
checked backwards to find where it starts to hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InsufficientData, OutOfRegime


@dataclass(frozen=True)
class QuasiPolynomial:
    """``polys[r]`` holds coefficients in ``k``, highest power first."""

    period: int
    polys: tuple[tuple[Fraction, ...], ...]
    valid_from: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "residues": [
                {"r": r, "coeffs": [_fmt(c) for c in poly], "valid_from_k": self.valid_from[r]}
                for r, poly in enumerate(self.polys)
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "QuasiPolynomial":
        rows = sorted(doc["residues"], key=lambda row: row["r"])
        if [row["r"] for row in rows] != list(range(doc["period"])):
            raise ValueError("residues must cover 0..period-1 exactly once")
        return cls(
            period=doc["period"],
            polys=tuple(tuple(Fraction(c) for c in row["coeffs"]) for row in rows),
            valid_from=tuple(row["valid_from_k"] for row in rows),
        )

    def pretty(self, r: int) -> str:
        poly = self.polys[r]
        deg = len(poly) - 1
        parts = []
        for i, c in enumerate(poly):
            if c == 0:
                continue
            p = deg - i
            mono = "" if p == 0 else ("k" if p == 1 else f"k^{p}")
            coef = _fmt(abs(c))
            body = coef if not mono else (mono if coef == "1" else f"{coef}*{mono}")
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def horner(poly: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in poly:
        acc = acc * x + c
    return acc


def _differences(values: Sequence[int]) -> list[int]:
    return [b - a for a, b in zip(values, values[1:])]


def _interpolate(points: Sequence[tuple[int, int]]) -> tuple[Fraction, ...]:
    """Lagrange interpolation expanded to coefficients, highest power first."""
    deg = len(points) - 1
    coeffs = [Fraction(0)] * (deg + 1)  # lowest power first while building
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            # multiply basis by (x - xj)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for t, b in enumerate(basis):
                nxt[t] -= b * xj
                nxt[t + 1] += b
            basis = nxt
            denom *= xi - xj
        for t, b in enumerate(basis):
            coeffs[t] += yi * b / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(reversed(coeffs))


def fit_polynomial(points: Sequence[tuple[int, int]]) -> tuple[tuple[Fraction, ...], int]:
    """Fit one residue class given consecutive ``(k, value)`` points."""
    ys = [y for _, y in points]
    for deg in range(len(points) - 1):
        tail = ys[-(deg + 2):]
        diffs = tail
        for _ in range(deg + 1):
            diffs = _differences(diffs)
        if all(x == 0 for x in diffs):
            poly = _interpolate(points[-(deg + 1):])
            start = len(points) - 1
            while start > 0 and horner(poly, points[start - 1][0]) == points[start - 1][1]:
                start -= 1
            return poly, points[start][0]
    raise InsufficientData(f"finite differences never stabilise over {len(points)} points")


def fit(values: Iterable[tuple[int, int]], period: int) -> QuasiPolynomial:
    """Recover one polynomial per residue class from ``(s, value)`` pairs."""
    if period < 1:
        raise ValueError("period must be positive")
    by_residue: dict[int, dict[int, int]] = {r: {} for r in range(period)}
    for s, v in values:
        k, r = divmod(s, period)
        by_residue[r][k] = v
    polys, starts = [], []
    for r in range(period):
        seq = by_residue[r]
        if not seq:
            raise InsufficientData(f"no values for residue {r}")
        ks = sorted(seq)
        # use the longest run of consecutive k ending at the largest k
        run = [ks[-1]]
        for k in reversed(ks[:-1]):
            if k != run[-1] - 1:
                break
            run.append(k)
        run.reverse()
        poly, start = fit_polynomial([(k, seq[k]) for k in run])
        polys.append(poly)
        starts.append(start)
    return QuasiPolynomial(period=period, polys=tuple(polys), valid_from=tuple(starts))


def evaluate(q: QuasiPolynomial, s: int) -> int:
    k, r = divmod(s, q.period)
    if k < q.valid_from[r]:
        raise OutOfRegime(f"s={s} (k={k}) precedes the fitted regime k >= {q.valid_from[r]}")
    value = horner(q.polys[r], k)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral value {value} at s={s}")
    return int(value)
