"""Exact Conley-Zehnder indices and Bott functions of rotation-sum paths.

A rotation path is t -> diag(e^{2 pi i w_1 t}, ..., e^{2 pi i w_d t}) on
[0, duration].  Everything here is exact rational arithmetic; angles on the
circle are measured in turns.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import groupby
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EpsTooLarge, NotCoprime, TrivialClass
from .lens import HomotopyClass, LensSpace, chern_order

HALF = Fraction(1, 2)


def as_fraction(x: int | str | Fraction) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


def floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def block_index(x: Fraction) -> int:
    """Index of one planar block with total rotation x (in turns)."""
    if x.denominator == 1:
        return 2 * x.numerator - 1
    return 2 * floor(x) + 1


def _compress(planes: Iterable[Fraction]) -> tuple[tuple[Fraction, int], ...]:
    return tuple((w, len(list(g))) for w, g in groupby(planes))


@dataclass(frozen=True)
class RotationPath:
    """Ordered runs (speed, multiplicity) of planar rotation blocks.

    Order matters only for blockwise composition; indices and Bott functions
    depend on the multiset of speeds.
    """

    speeds: tuple[tuple[Fraction, int], ...]
    duration: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        runs = []
        for w, m in self.speeds:
            if int(m) != m or m < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {m}")
            runs.append((as_fraction(w), int(m)))
        if not runs:
            raise ValueError("a rotation path needs at least one block")
        dur = as_fraction(self.duration)
        if dur <= 0:
            raise ValueError("duration must be positive")
        object.__setattr__(self, "speeds", tuple(runs))
        object.__setattr__(self, "duration", dur)

    @classmethod
    def from_planes(cls, planes: Sequence[Fraction | int | str],
                    duration: Fraction | int = 1) -> RotationPath:
        return cls(_compress(as_fraction(w) for w in planes), as_fraction(duration))

    @property
    def half_dim(self) -> int:
        return sum(m for _, m in self.speeds)

    @property
    def dimension(self) -> int:
        return 2 * self.half_dim

    def planes(self) -> list[Fraction]:
        return [w for w, m in self.speeds for _ in range(m)]

    def rotations(self) -> list[tuple[Fraction, int]]:
        """Total rotation (turns) of each run over the whole duration."""
        if self.duration == 1:
            return list(self.speeds)
        return [(w * self.duration, m) for w, m in self.speeds]

    def iterate(self, k: int) -> RotationPath:
        if k < 1:
            raise ValueError("iterate count must be positive")
        return RotationPath(self.speeds, self.duration * k)

    def shift(self, q: Fraction | int) -> RotationPath:
        """Add q full turns per unit time to every block."""
        q = as_fraction(q)
        return RotationPath(tuple((w + q, m) for w, m in self.speeds), self.duration)

    def compose(self, other: RotationPath) -> RotationPath:
        """Product of two simultaneously diagonal paths (speeds add plane by plane)."""
        if self.duration != other.duration:
            raise DimensionMismatch("paths must share the same duration")
        a, b = self.planes(), other.planes()
        if len(a) != len(b):
            raise DimensionMismatch(f"dimensions differ: {2 * len(a)} vs {2 * len(b)}")
        return RotationPath.from_planes([x + y for x, y in zip(a, b)], self.duration)

    def direct_sum(self, other: RotationPath) -> RotationPath:
        if self.duration != other.duration:
            raise DimensionMismatch("paths must share the same duration")
        return RotationPath(self.speeds + other.speeds, self.duration)


def cz_index(path: RotationPath) -> int:
    return sum(m * block_index(x) for x, m in path.rotations())


def _planes_index(planes: Sequence[Fraction]) -> int:
    """Index of a unit-duration path given plane by plane, on integers."""
    D = math.lcm(*{w.denominator for w in planes})
    total = 0
    for w in planes:
        x = w.numerator * (D // w.denominator)
        q, r = divmod(x, D)
        total += 2 * q + (1 if r else -1)
    return total


def mean_index(path: RotationPath) -> Fraction:
    return sum((2 * m * x for x, m in path.rotations()), Fraction(0))


def _fold(angle: Fraction) -> Fraction:
    """Map an angle in turns to [0, 1/2] using z -> conj(z)."""
    a = angle - floor(angle)
    return 1 - a if a > HALF else a


@dataclass(frozen=True)
class BottFunction:
    """Piecewise-constant function on the unit circle.

    Stored on the closed upper half-circle: the value at 1, the common
    splitting number S+_1 = S-_1 at 1, and jumps (angle, S+, S-) at angles in
    (0, 1/2].  The lower half follows from B(z) = B(conj z).
    """

    value_at_one: int
    jumps: tuple[tuple[Fraction, int, int], ...] = ()
    split_at_one: int = 0
    _angles: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)
    _prefix: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        merged: dict[Fraction, list[int]] = {}
        for ang, sp, sm in self.jumps:
            ang = as_fraction(ang)
            if not 0 < ang <= HALF:
                raise ValueError(f"jump angle {ang} outside (0, 1/2]")
            if sp < 0 or sm < 0:
                raise ValueError("splitting numbers are non-negative")
            if ang == HALF and sp != sm:
                raise ValueError("splitting numbers at -1 must coincide")
            cur = merged.setdefault(ang, [0, 0])
            cur[0] += sp
            cur[1] += sm
        jumps = tuple((a, sp, sm) for a, (sp, sm) in sorted(merged.items()) if sp or sm)
        if self.split_at_one < 0:
            raise ValueError("splitting numbers are non-negative")
        prefix = [0]
        for _, sp, sm in jumps:
            prefix.append(prefix[-1] + sp - sm)
        object.__setattr__(self, "jumps", jumps)
        object.__setattr__(self, "_angles", tuple(a for a, _, _ in jumps))
        object.__setattr__(self, "_prefix", tuple(prefix))

    def __call__(self, angle: Fraction | int | str) -> int:
        theta = _fold(as_fraction(angle))
        if theta == 0:
            return self.value_at_one
        i = bisect_left(self._angles, theta)
        at = self.jumps[i][2] if i < len(self.jumps) and self._angles[i] == theta else 0
        return self.value_at_one + self.split_at_one + self._prefix[i] - at

    def splitting(self, angle: Fraction | int | str) -> tuple[int, int]:
        """(S+, S-) at an angle anywhere on the circle."""
        a = as_fraction(angle)
        a -= floor(a)
        if a == 0:
            return self.split_at_one, self.split_at_one
        lower = a > HALF
        theta = 1 - a if lower else a
        i = bisect_left(self._angles, theta)
        if i < len(self.jumps) and self._angles[i] == theta:
            _, sp, sm = self.jumps[i]
            return (sm, sp) if lower else (sp, sm)
        return 0, 0

    def full_circle_jumps(self) -> list[tuple[Fraction, int, int]]:
        """Jumps on (0, 1) reconstructed through S+-(z) = S-+(conj z)."""
        out = list(self.jumps)
        out += [(1 - a, sm, sp) for a, sp, sm in self.jumps if a != HALF]
        return sorted(out)

    def evaluate_full(self, angle: Fraction | int | str) -> int:
        """Evaluate by walking counter-clockwise over the full circle.

        Independent of the folding used by ``__call__``; the two agree exactly
        when the stored data are symmetric.
        """
        a = as_fraction(angle)
        a -= floor(a)
        if a == 0:
            return self.value_at_one
        total = self.value_at_one + self.split_at_one
        for ang, sp, sm in self.full_circle_jumps():
            if ang < a:
                total += sp - sm
            elif ang == a:
                total -= sm
        return total

    def pieces(self) -> list[tuple[Fraction, Fraction, int]]:
        """Constant pieces over [0, 1/2] as (lo, hi, value).

        A piece with lo == hi is a single point; otherwise the open arc (lo, hi).
        """
        base = self.value_at_one + self.split_at_one
        out = [(Fraction(0), Fraction(0), self.value_at_one)]
        prev = Fraction(0)
        for (ang, _, sm), before in zip(self.jumps, self._prefix):
            out.append((prev, ang, base + before))
            out.append((ang, ang, base + before - sm))
            prev = ang
        if prev < HALF:
            out.append((prev, HALF, base + self._prefix[-1]))
            out.append((HALF, HALF, base + self._prefix[-1]))
        return out

    def max_off_one(self) -> int:
        return max(v for lo, hi, v in self.pieces() if hi > 0)

    def max(self) -> int:
        return max(self.value_at_one, self.max_off_one())

    def integral(self) -> Fraction:
        """Integral over the circle with total length 1 (equals the mean index)."""
        return 2 * sum((hi - lo) * v for lo, hi, v in self.pieces() if hi > lo)

    def root_sum(self, k: int) -> int:
        """Sum of B over the k-th roots of unity."""
        return sum(self(Fraction(i, k)) for i in range(k))

    def __add__(self, other: BottFunction) -> BottFunction:
        return BottFunction(self.value_at_one + other.value_at_one,
                            self.jumps + other.jumps,
                            self.split_at_one + other.split_at_one)


def block_bott(x: Fraction, m: int = 1) -> BottFunction:
    """Bott function of m copies of a planar rotation by x turns."""
    if x.denominator == 1:
        return BottFunction(m * block_index(x), (), m)
    f = x - floor(x)
    if f < HALF:
        jump = (f, 0, m)
    elif f > HALF:
        jump = (1 - f, m, 0)
    else:
        jump = (HALF, m, m)
    return BottFunction(m * block_index(x), (jump,), 0)


def constant_bott(value: int) -> BottFunction:
    """Bott function of a path with no unit eigenvalues at its endpoint (e.g. hyperbolic)."""
    return BottFunction(value)


def bott_function(path: RotationPath) -> BottFunction:
    rots = path.rotations()
    D = math.lcm(*{x.denominator for x, _ in rots})
    counts: dict[int, int] = {}
    for x, m in rots:
        k = x.numerator * (D // x.denominator)
        counts[k] = counts.get(k, 0) + m
    value = split = 0
    jumps: list[tuple[Fraction, int, int]] = []
    for k, m in counts.items():
        q, r = divmod(k, D)
        if r == 0:
            value += m * (2 * q - 1)
            split += m
            continue
        value += m * (2 * q + 1)
        if 2 * r < D:
            jumps.append((Fraction(r, D), 0, m))
        elif 2 * r > D:
            jumps.append((Fraction(D - r, D), m, 0))
        else:
            jumps.append((HALF, m, m))
    return BottFunction(value, tuple(jumps), split)


def elliptic_certificate(bott: BottFunction, n: int) -> bool:
    return bott.max() - bott.value_at_one >= n


# ---------------------------------------------------------------------------
# the twist path phi^{G_a}_{-t} and orbit indices


def _twist_path(lens: LensSpace, a: HomotopyClass, eps: Fraction) -> RotationPath:
    runs: list[list[int]] = []
    for k in _twist_numerators(lens, a):
        if runs and runs[-1][0] == k:
            runs[-1][1] += 1
        else:
            runs.append([k, 1])
    memo: dict[int, Fraction] = {}
    for k, _ in runs:
        if k not in memo:
            memo[k] = Fraction(k, lens.p) + eps if eps else Fraction(k, lens.p)
    return RotationPath(tuple((memo[k], m) for k, m in runs))


def twist_ga(lens: LensSpace, a: HomotopyClass) -> RotationPath:
    if a.j == lens.p:
        raise TrivialClass(f"no twist path for the trivial class of {lens}")
    return _twist_path(lens, a, Fraction(0))


def eps_bound(lens: LensSpace, a: HomotopyClass) -> Fraction:
    """Upper bound (exclusive) for the perturbation parameter of the twist path."""
    marks = sorted({Fraction(abs(w), lens.p) for w in a.homotopy_weights} | {Fraction(0), HALF})
    gap = min(b - c for c, b in zip(marks, marks[1:]))
    return gap / 4


def default_eps(lens: LensSpace, a: HomotopyClass) -> Fraction:
    return eps_bound(lens, a) / 2


def twist_ga_eps(lens: LensSpace, a: HomotopyClass, eps: Fraction | int | str) -> RotationPath:
    if a.j == lens.p:
        raise TrivialClass(f"no twist path for the trivial class of {lens}")
    eps = as_fraction(eps)
    bound = eps_bound(lens, a)
    if not 0 < eps < bound:
        raise EpsTooLarge(eps, bound)
    return _twist_path(lens, a, eps)


def orbit_index(lens: LensSpace, a: HomotopyClass, gamma_beta: RotationPath) -> Fraction:
    """Index of a closed Reeb orbit in class a from its N-fold linearized flow.

    For the trivial class the twist is the identity.
    """
    N = chern_order(lens)
    expected = (2 * lens.n + 2) * N
    if gamma_beta.dimension != expected:
        raise DimensionMismatch(f"expected dimension {expected}, got {gamma_beta.dimension}")
    if gamma_beta.duration != 1:
        raise DimensionMismatch("the linearized flow must be parametrized on [0, 1]")
    return _orbit_index_planes(lens, a, gamma_beta.planes())


@lru_cache(maxsize=65536)
def _twist_numerators(lens: LensSpace, a: HomotopyClass) -> tuple[int, ...]:
    """Twist speeds as numerators over p."""
    N = chern_order(lens)
    la = a.homotopy_weights
    nums = [-w for w in la] * N
    nums[-1] = N * sum(la) - la[-1]
    return tuple(nums)


def _orbit_index_planes(lens: LensSpace, a: HomotopyClass, planes: list[Fraction]) -> Fraction:
    p = lens.p
    D = math.lcm(p, *{g.denominator for g in planes})
    s = D // p
    total = 0
    for t, g in zip(_twist_numerators(lens, a), planes):
        q, r = divmod(t * s + g.numerator * (D // g.denominator), D)
        total += 2 * q + (1 if r else -1)
    return Fraction(total, chern_order(lens)) + 1


def _orbit_index_copies(lens: LensSpace, a: HomotopyClass, copy: list[Fraction]) -> Fraction:
    """Same as orbit_index when the linearized flow is N equal copies of ``copy``.

    The twist is periodic except for its very last plane, so the first N-1
    copies all contribute the same amount.
    """
    N = chern_order(lens)
    p = lens.p
    D = math.lcm(p, *{g.denominator for g in copy})
    s = D // p
    tw = _twist_numerators(lens, a)
    gs = [g.numerator * (D // g.denominator) for g in copy]

    def idx(twist: Sequence[int]) -> int:
        total = 0
        for t, g in zip(twist, gs):
            q, r = divmod(t * s + g, D)
            total += 2 * q + (1 if r else -1)
        return total

    d = len(copy)
    return Fraction((N - 1) * idx(tw[:d]) + idx(tw[-d:]), N) + 1


def ellipsoid_eps(lens: LensSpace, scale: Fraction = Fraction(1)) -> list[Fraction]:
    """Small coefficients used for the ellipsoid oracle, e_i = 1/(p (n+2) 4^i)."""
    return [scale * Fraction(1, lens.p * (lens.n + 2) * 4**i) for i in range(1, lens.n + 1)]


def ellipsoid_orbit_indices(lens: LensSpace, a: HomotopyClass,
                            scale: Fraction = Fraction(1)) -> list[Fraction]:
    """Index of the shortest orbit in class a within each coordinate plane.

    The ellipsoid is H = pi (j/p |z_0|^2 + sum e_i |z_i|^2).  The orbit in plane
    i has period T with c_i T = (j l_i mod p)/p, which is the condition that it
    closes up under the deck transformation psi^j.
    """
    if a.j == lens.p:
        raise TrivialClass("the ellipsoid oracle is defined for nontrivial classes")
    coeffs = [Fraction(a.j, lens.p)] + ellipsoid_eps(lens, scale)
    out = []
    for c, w in zip(coeffs, lens.weights):
        T = Fraction((a.j * w) % lens.p, lens.p) / c
        out.append(_orbit_index_copies(lens, a, [ck * T for ck in coeffs]))
    return out


def ellipsoid_min_index(lens: LensSpace, a: HomotopyClass, certify: bool = True) -> Fraction:
    best = min(ellipsoid_orbit_indices(lens, a))
    if certify:
        halved = min(ellipsoid_orbit_indices(lens, a, Fraction(1, 2)))
        if halved != best:
            raise ArithmeticError(
                f"ellipsoid minimum not stable under halving: {best} vs {halved}")
    return best


def _hat_weights(lens: LensSpace) -> list[int]:
    return [w % lens.p for w in lens.weights]


def toric_orbit_index(lens: LensSpace, a: HomotopyClass, m: int) -> Fraction:
    """Closed-form index of the orbit family of the circle-action contact form."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if gcd(a.j, m) != 1:
        raise NotCoprime(f"j={a.j} and m={m} must be coprime")
    s = sum(_hat_weights(lens))
    return 2 * (Fraction(s * a.j, lens.p) + m - Fraction(lens.n, 2))


def toric_lift_path(lens: LensSpace, a: HomotopyClass, m: int) -> RotationPath:
    """N copies of the linearized lifted flow used by the circle-action form."""
    if gcd(a.j, m) != 1:
        raise NotCoprime(f"j={a.j} and m={m} must be coprime")
    copy = [Fraction(h * a.j, lens.p) for h in _hat_weights(lens)]
    copy[-1] += m
    return RotationPath.from_planes(copy * chern_order(lens))


def toric_orbit_index_engine(lens: LensSpace, a: HomotopyClass, m: int) -> Fraction:
    return orbit_index(lens, a, toric_lift_path(lens, a, m))


__all__ = [
    "RotationPath", "BottFunction", "block_index", "cz_index", "mean_index",
    "bott_function", "block_bott", "constant_bott", "elliptic_certificate",
    "twist_ga", "twist_ga_eps", "eps_bound", "default_eps", "orbit_index",
    "ellipsoid_eps", "ellipsoid_orbit_indices", "ellipsoid_min_index",
    "toric_orbit_index", "toric_lift_path", "toric_orbit_index_engine",
]
