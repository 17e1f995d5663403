"""Lens spaces L_p(l_0, ..., l_n), their homotopy classes and Chern order."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BadModulus, NotCoprime, OutOfRange


def reduce_mod(x: int, p: int) -> int:
    """Representative of x mod p in the half-open window (-p/2, p/2]."""
    r = x % p
    return r - p if 2 * r > p else r


@dataclass(frozen=True)
class LensSpace:
    p: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.p < 2:
            raise BadModulus(f"p must be at least 2, got {self.p}")
        if not self.weights:
            raise ValueError("weight list must be nonempty")
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        for w in self.weights:
            if gcd(w, self.p) != 1:
                raise NotCoprime(f"weight {w} is not coprime with p={self.p}")
            if reduce_mod(w, self.p) != w:
                raise OutOfRange(f"weight {w} lies outside (-p/2, p/2] for p={self.p}")
        if self.weights[0] != 1:
            raise OutOfRange("first weight must be normalized to 1")

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    @property
    def dimension(self) -> int:
        return 2 * self.n + 1

    def __str__(self) -> str:
        return f"L^{self.dimension}_{self.p}({','.join(map(str, self.weights))})"


@dataclass(frozen=True)
class HomotopyClass:
    j: int
    homotopy_weights: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return all(w == 0 for w in self.homotopy_weights)


def normalize_weights(p: int, raw: list[int] | tuple[int, ...]) -> LensSpace:
    """Rescale by the inverse of the first weight and reduce into (-p/2, p/2]."""
    if p < 2:
        raise BadModulus(f"p must be at least 2, got {p}")
    if len(raw) == 0:
        raise ValueError("weight list must be nonempty")
    for w in raw:
        if gcd(int(w), p) != 1:
            raise NotCoprime(f"weight {w} is not coprime with p={p}")
    inv = pow(int(raw[0]) % p, -1, p)
    return LensSpace(p, tuple(reduce_mod(inv * int(w), p) for w in raw))


def homotopy_class(lens: LensSpace, j: int) -> HomotopyClass:
    if not 1 <= j <= lens.p:
        raise OutOfRange(f"class index j={j} must lie in 1..{lens.p}")
    return HomotopyClass(j, tuple(reduce_mod(j * w, lens.p) for w in lens.weights))


def chern_order(lens: LensSpace) -> int:
    return lens.p // gcd(sum(lens.weights) % lens.p, lens.p)


def classes(lens: LensSpace) -> list[HomotopyClass]:
    return [homotopy_class(lens, j) for j in range(1, lens.p + 1)]


def units(p: int) -> list[int]:
    """Residues coprime to p, represented in (-p/2, p/2] and sorted."""
    return sorted(reduce_mod(u, p) for u in range(1, p + 1) if gcd(u, p) == 1)
