"""Graded and action-filtered ranks of positive equivariant symplectic
homology for the prequantization form on L_p(1, ..., 1).

The Morse-Bott spectral sequence degenerates: each iterate of the fibre orbit
in class j contributes one copy of H_*(CP^n), shifted by its index.  Actions
are carried as rational coefficients of pi.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import EmptyTable, OnSpectrum


def iterate_index(n: int, p: int, k: int) -> Fraction:
    """Index of the k-th iterate of the simple fibre orbit."""
    return Fraction((2 * n + 2) * k, p) - n


def _check(n: int, p: int, j: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    if p < 2:
        raise ValueError("p must be at least 2")
    if not 1 <= j <= p:
        raise ValueError(f"class j={j} must lie in 1..{p}")


@dataclass(frozen=True)
class GradedRanks:
    n: int
    p: int
    j: int
    entries: dict[Fraction, int] = field(hash=False)
    action_bound: Fraction | None = None  # coefficient of pi
    scale: Fraction | None = None
    k_max: int | None = None

    def degrees(self) -> list[Fraction]:
        return sorted(self.entries)

    def to_json(self) -> dict[str, Any]:
        ctx: dict[str, Any] = {"n": self.n, "p": self.p, "class": self.j,
                               "k_max": self.k_max,
                               "action_bound": None if self.action_bound is None
                               else f"{self.action_bound}*pi",
                               "scale": None if self.scale is None else str(self.scale)}
        return {"context": ctx,
                "ranks": [{"degree": str(d), "rank": self.entries[d]} for d in self.degrees()]}


def orbit_multiplicities(p: int, j: int, k_max: int) -> list[int]:
    """Covering multiplicities of the fibre orbits in class j: j, j+p, j+2p, ..."""
    return [(k - 1) * p + j for k in range(1, k_max + 1)]


def _ranks(n: int, p: int, mults: list[int]) -> dict[Fraction, int]:
    c: Counter[Fraction] = Counter()
    for m in mults:
        base = iterate_index(n, p, m)
        for i in range(n + 1):
            c[base + 2 * i] += 1
    return dict(c)


def graded_ranks(n: int, p: int, j: int, k_max: int) -> GradedRanks:
    _check(n, p, j)
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    return GradedRanks(n, p, j, _ranks(n, p, orbit_multiplicities(p, j, k_max)), k_max=k_max)


def min_degree(ranks: GradedRanks) -> Fraction:
    if not ranks.entries:
        raise EmptyTable("rank table is empty")
    return min(ranks.entries)


def action(p: int, m: int, t: Fraction) -> Fraction:
    """Action of the m-fold fibre orbit of alpha_t, as a coefficient of pi."""
    return Fraction(m) * t * t / p


def filtered_ranks(n: int, p: int, t: Fraction | int, T: Fraction | int, j: int = 1,
                   k_max: int | None = None) -> GradedRanks:
    """Ranks of the action-filtered group with bound T*pi.

    Without ``k_max`` every iterate below the bound is kept, which is finite.
    """
    _check(n, p, j)
    t, T = Fraction(t), Fraction(T)
    if t <= 0:
        raise ValueError("scale t must be positive")
    mults = []
    k = 1
    while True:
        m = (k - 1) * p + j
        a = action(p, m, t)
        if a == T:
            raise OnSpectrum(f"action bound {T}*pi equals the action of the {m}-fold orbit")
        if a > T or (k_max is not None and k > k_max):
            break
        mults.append(m)
        k += 1
    return GradedRanks(n, p, j, _ranks(n, p, mults), action_bound=T, scale=t, k_max=k_max)


def carrier_degrees(n: int, p: int) -> tuple[list[Fraction], int]:
    """Degrees mu(gamma) + 2i of the ladder and how many lie below h_a = (2n+2)/p."""
    if n < 1 or p < 2:
        raise ValueError("need n >= 1 and p >= 2")
    degs = [iterate_index(n, p, 1) + 2 * i for i in range(n + 1)]
    h = Fraction(2 * n + 2, p)
    return degs, sum(1 for d in degs if d < h)
