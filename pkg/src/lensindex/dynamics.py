"""Orbit records, theorem-level predicates and parameter arithmetic.

Nothing here integrates a flow.  Orbits are described by the data a producer
can certify (class, action, index, return-map spectrum) and the predicates
check the index/spectrum inequalities that convexity would force.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from .errors import BadParams, BadSpectrum, PinchingFails, TrivialClass
from .index import RotationPath, bott_function, constant_bott, elliptic_certificate
from .invariants import h_a, h_tilde_a, k_a, positivity
from .lens import LensSpace, homotopy_class


class Kind(str, Enum):
    ROTATION = "rotation"
    HYPERBOLIC = "hyperbolic"
    MINUS_ONE = "minus_one"
    PLUS_ONE = "plus_one"


@dataclass(frozen=True)
class Eigen:
    """A group of eigenvalues of the linearized return map.

    ``value`` is the rotation angle in turns for ROTATION (the pair
    e^{+-2 pi i value}) and the modulus for HYPERBOLIC; unused otherwise.
    ``multiplicity`` counts eigenvalues, so a rotation pair has 2.
    """

    kind: Kind
    multiplicity: int
    value: Fraction | None = None

    @property
    def unit(self) -> bool:
        return self.kind is not Kind.HYPERBOLIC

    def to_json(self) -> dict[str, Any]:
        d: dict[str, Any] = {"kind": self.kind.value, "multiplicity": self.multiplicity}
        if self.value is not None:
            d["value"] = str(self.value)
        return d


def rotation(turns: Fraction | int | str, pairs: int = 1) -> Eigen:
    return Eigen(Kind.ROTATION, 2 * pairs, Fraction(turns))


def hyperbolic(modulus: Fraction | int | str, pairs: int = 1) -> Eigen:
    m = Fraction(modulus)
    if m <= 0 or m == 1:
        raise BadSpectrum("hyperbolic modulus must be positive and different from 1")
    return Eigen(Kind.HYPERBOLIC, 2 * pairs, m)


@dataclass(frozen=True)
class OrbitRecord:
    lens: LensSpace
    j: int
    action: Fraction
    index: Fraction
    nullity: int
    spectrum: tuple[Eigen, ...]
    label: str = ""
    path: RotationPath | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "spectrum", tuple(self.spectrum))
        object.__setattr__(self, "action", Fraction(self.action))
        object.__setattr__(self, "index", Fraction(self.index))
        if self.action <= 0:
            raise ValueError("action must be positive")
        if self.nullity < 0:
            raise ValueError("nullity must be non-negative")
        ones = sum(e.multiplicity for e in self.spectrum if e.kind is Kind.PLUS_ONE)
        if self.nullity > ones:
            raise BadSpectrum(f"nullity {self.nullity} exceeds the multiplicity {ones} of 1")

    @property
    def support_window(self) -> tuple[Fraction, Fraction]:
        return self.index, self.index + self.nullity

    def to_json(self) -> dict[str, Any]:
        return {"label": self.label, "lens": str(self.lens), "p": self.lens.p,
                "weights": list(self.lens.weights), "class": self.j,
                "action": str(self.action), "index": str(self.index),
                "nullity": self.nullity, "spectrum": [e.to_json() for e in self.spectrum]}


def classify(orbit: OrbitRecord) -> str:
    total = sum(e.multiplicity for e in orbit.spectrum)
    if total != 2 * orbit.lens.n:
        raise BadSpectrum(f"spectrum has {total} eigenvalues, expected {2 * orbit.lens.n}")
    units = [e.unit for e in orbit.spectrum]
    if all(units):
        return "elliptic"
    if not any(units):
        return "hyperbolic"
    return "neither"


INDEX_BELOW_K = "index_below_k_a"
HYPERBOLIC_BELOW_H = "hyperbolic_below_h"
NOT_ELLIPTIC_AT_K = "non_elliptic_at_k_a"


@dataclass(frozen=True)
class MainTheoremReport:
    orbit: OrbitRecord
    strict: bool
    violations: tuple[str, ...]
    thresholds: dict[str, Fraction] = field(hash=False)

    def to_json(self) -> dict[str, Any]:
        return {"orbit": self.orbit.to_json(), "strict": self.strict,
                "violations": list(self.violations),
                "thresholds": {k: str(v) for k, v in self.thresholds.items()}}


def check_main_theorem(orbit: OrbitRecord, strict: bool = False) -> MainTheoremReport:
    """Check the three index/spectrum consequences of (strict) convexity.

    ``strict`` selects the strictly convex version, which uses h~_a as the
    hyperbolicity threshold and positivity rather than strict positivity.
    """
    lens = orbit.lens
    if orbit.j == lens.p:
        raise TrivialClass("the index theorem is stated for non-contractible orbits")
    a = homotopy_class(lens, orbit.j)
    ka, ha, hta = k_a(lens, a), h_a(lens, a), h_tilde_a(lens, a)
    kind = classify(orbit)
    pos, spos = positivity(lens, a)
    out = []
    if orbit.index < ka:
        out.append(INDEX_BELOW_K)
    if orbit.index < (hta if strict else ha) and kind == "hyperbolic":
        out.append(HYPERBOLIC_BELOW_H)
    if (pos if strict else spos) and orbit.index == ka and kind != "elliptic":
        out.append(NOT_ELLIPTIC_AT_K)
    return MainTheoremReport(orbit, strict, tuple(out), {"k_a": ka, "h_a": ha, "h_tilde_a": hta})


def spectrum_of_path(path: RotationPath, hyperbolic_pairs: int = 0) -> list[Eigen]:
    """Spectrum of the endpoint of a rotation path, plus optional hyperbolic pairs."""
    out = []
    for x, m in path.rotations():
        f = x - math.floor(x)
        if f == 0:
            out.append(Eigen(Kind.PLUS_ONE, 2 * m))
        elif f == Fraction(1, 2):
            out.append(Eigen(Kind.MINUS_ONE, 2 * m))
        else:
            out.append(rotation(min(f, 1 - f), m))
    if hyperbolic_pairs:
        out.append(hyperbolic(2, hyperbolic_pairs))
    return out


def certificate_consistent(path: RotationPath, hyperbolic_bott: int | None,
                           hyperbolic_pairs: int) -> tuple[bool, bool]:
    """(certificate, elliptic) for a rotation path plus hyperbolic planar blocks.

    The hyperbolic blocks contribute a constant Bott function with the given
    total value.
    """
    b = bott_function(path)
    if hyperbolic_pairs:
        b = b + constant_bott(hyperbolic_bott or 0)
    n = path.half_dim + hyperbolic_pairs
    spec = spectrum_of_path(path, hyperbolic_pairs)
    elliptic = all(e.unit for e in spec)
    return elliptic_certificate(b, n), elliptic


# ---------------------------------------------------------------------------
# parameters of the non-convex dynamically convex construction


def delta_search(n: int, p: int) -> int | None:
    """Least even integer in [(4n+6)/p, 2n+2), or None when there is none."""
    if n < 1 or p < 2:
        raise ValueError("need n >= 1 and p >= 2")
    lo = math.ceil(Fraction(4 * n + 6, p))
    d = lo + (lo % 2)
    return d if d < 2 * n + 2 else None


def delta_admissible(n: int, p: int) -> bool:
    """The set on which an even Delta is guaranteed to exist."""
    return p >= 3 and (n, p) not in {(1, 3), (1, 4), (2, 3)}


def delta_fn(x: Fraction | int) -> int:
    x = Fraction(x)
    if x.denominator == 1:
        return 2 * x.numerator + 1
    return 2 * math.ceil(x) - 1


@dataclass(frozen=True)
class DynConvexCheck:
    holds: bool
    lhs: Fraction
    rhs: Fraction
    sufficient: bool


def dc_inequality(n: int, p: int, delta: int, eps: Fraction, q: int,
                  T_G: Fraction) -> DynConvexCheck:
    """Index bound for a contractible orbit of the plugged Hamiltonian.

    ``holds`` is the exact evaluation of
        (n + 2 + d((2n+4-D+e)/2 T) + (n-1) d(e T) + 1)/q <= 2n+4 - (2n+2)/p.
    ``sufficient`` is the closed-form route that bounds every delta by its
    argument plus one:  D - (2n+3)/q - (2n-1) e >= (2n+2)/p.
    """
    eps, T_G = Fraction(eps), Fraction(T_G)
    if q < p:
        raise BadParams(f"q={q} must be at least p={p}")
    if T_G <= 0 or math.ceil(T_G) > q:
        raise BadParams(f"T_G={T_G} must satisfy 0 < ceil(T_G) <= q={q}")
    if eps <= 0:
        raise BadParams("eps must be positive")
    lhs = Fraction(n + 2 + delta_fn((2 * n + 4 - delta + eps) / 2 * T_G)
                   + (n - 1) * delta_fn(eps * T_G) + 1, q)
    rhs = 2 * n + 4 - Fraction(2 * n + 2, p)
    suff = delta - Fraction(2 * n + 3, q) - (2 * n - 1) * eps >= Fraction(2 * n + 2, p)
    return DynConvexCheck(lhs <= rhs, lhs, rhs, suff)


def dc_inequality_check(n: int, p: int, delta: int, eps: Fraction, q: int,
                        T_G: Fraction) -> bool:
    return dc_inequality(n, p, delta, eps, q, T_G).holds


def hyperbolic_index_eq(n: int, p: int, j_a: int) -> Fraction:
    """Index of the hyperbolic orbit created over the generic toric orbit (m = n-1)."""
    return Fraction((2 * n + 2) * j_a, p) - 2


def orbit_below_k_a(n: int, p: int, delta: int, eps: Fraction) -> OrbitRecord:
    """The elliptic orbit of class j = p-1 whose index drops below k_a."""
    lens = LensSpace(p, (1,) * (n + 1))
    idx = delta - Fraction(2 * n + 2, p) - n
    big = Fraction(2 * n + 4 - delta, 2) + Fraction(eps, 2)
    spec = [rotation(_fold_turns(-big))] + ([rotation(_fold_turns(-eps), n - 1)] if n > 1 else [])
    return OrbitRecord(lens, p - 1, Fraction(1), idx, 0, tuple(spec),
                       label=f"elliptic orbit below k_a, n={n}, p={p}, Delta={delta}")


def _fold_turns(x: Fraction) -> Fraction:
    f = x - math.floor(x)
    return min(f, 1 - f)


def hyperbolic_orbit(n: int, p: int, j: int) -> OrbitRecord:
    """Hyperbolic orbit with index (2n+2)j/p - 2 on L_p(1, ..., 1)."""
    lens = LensSpace(p, (1,) * (n + 1))
    return OrbitRecord(lens, j, Fraction(1), hyperbolic_index_eq(n, p, j), 0,
                       (hyperbolic(2, n),), label=f"hyperbolic orbit, n={n}, p={p}, j={j}")


def sharp_hyperbolic_orbit(n: int, p: int) -> OrbitRecord:
    """Hyperbolic orbit of class 1 with index exactly h_a = (2n+2)/p."""
    lens = LensSpace(p, (1,) * (n + 1))
    return OrbitRecord(lens, 1, Fraction(1), Fraction(2 * n + 2, p), 0,
                       (hyperbolic(2, n),), label=f"sharp hyperbolic orbit, n={n}, p={p}")


def sharp_orbit_l34() -> OrbitRecord:
    """Hyperbolic orbit of class 1 on L_4(1,1) with index k_a + 1 = h_a."""
    lens = LensSpace(4, (1, 1))
    return OrbitRecord(lens, 1, Fraction(1), Fraction(1), 0, (hyperbolic(2),),
                       label="sharp hyperbolic orbit on L_4(1,1)")


# ---------------------------------------------------------------------------
# pinching and multiplicity bookkeeping


@dataclass(frozen=True)
class PinchingData:
    r: Fraction
    R: Fraction
    p: int
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "R", Fraction(self.R))
        if self.r <= 0 or self.R <= 0 or self.r > self.R:
            raise BadParams("need 0 < r <= R")
        if self.p < 1 or self.n < 1:
            raise BadParams("need p >= 1 and n >= 1")


def pinching_ok(d: PinchingData) -> bool:
    return d.R**2 < (d.p + 1) * d.r**2


def cw_min_period(d: PinchingData) -> Fraction:
    """Lower bound for the period of a simple orbit in a nontrivial class, over pi."""
    return 2 * d.r**2 / d.p


def simplicity_certificate(d: PinchingData, k: int, T: Fraction | int) -> bool:
    """Whether the positivity chain excluding (kp+1)-fold covers closes.

    T is the period as a coefficient of pi; the Hessian of G_a has top
    eigenvalue 2 pi/p.
    """
    T = Fraction(T)
    if k < 1:
        raise BadParams("k must be a positive integer")
    if T < cw_min_period(d):
        raise BadParams(f"period {T}*pi is below the lower bound {cw_min_period(d)}*pi")
    return Fraction(2, d.p) / ((k * d.p + 1) * T) < 1 / d.R**2


H_PINCHED = "H-pinched"
STRICTLY_CONVEX = "pinched-strictly-convex"


def multiplicity_guarantee(n: int, p: int, d: PinchingData, kind: str) -> int:
    if (d.n, d.p) != (n, p):
        raise BadParams("pinching data disagree with (n, p)")
    if not pinching_ok(d):
        raise PinchingFails(f"R^2 = {d.R**2} is not below (p+1) r^2 = {(p + 1) * d.r**2}")
    if kind == H_PINCHED:
        return (n + 1) // 2
    if kind == STRICTLY_CONVEX:
        return n + 1
    raise BadParams(f"unknown convexity kind {kind!r}")
