"""Verification suites run by ``lensindex verify``.

Each suite yields named checks; a check fails with the first identity that
did not hold.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator

from . import dynamics as dyn
from .esh import carrier_degrees, graded_ranks, min_degree
from .index import (RotationPath, bott_function, cz_index, default_eps, ellipsoid_min_index,
                    mean_index, toric_orbit_index, toric_orbit_index_engine, twist_ga,
                    twist_ga_eps)
from .invariants import find_positive_classes, h_a, h_tilde_a, k_a, positivity
from .lens import LensSpace, chern_order, classes, homotopy_class, units


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, "detail": self.detail}


class _Collector:
    """Accumulates identities for one check and remembers the first failure."""

    def __init__(self, name: str) -> None:
        self.name = name
        self.count = 0
        self.first: str | None = None

    def expect(self, ok: bool, what: str) -> None:
        self.count += 1
        if not ok and self.first is None:
            self.first = what

    def eq(self, got: object, want: object, what: str) -> None:
        self.expect(got == want, f"{what}: got {got}, expected {want}")

    def batch(self, count: int, failure: str | None) -> None:
        self.count += count
        if failure is not None and self.first is None:
            self.first = failure

    def result(self) -> Check:
        if self.first is None:
            return Check(self.name, True, f"{self.count} identities")
        return Check(self.name, False, self.first)


def ones(p: int, n: int) -> LensSpace:
    return LensSpace(p, (1,) * (n + 1))


def alternating(p: int, n: int) -> LensSpace:
    return LensSpace(p, tuple(1 if i % 2 == 0 else -1 for i in range(n + 1)))


def lens_sweep(p_max: int, n_max: int, p_min: int = 2) -> Iterator[LensSpace]:
    """All normalized lens spaces up to permutation of l_1..l_n."""
    for p in range(p_min, p_max + 1):
        us = units(p)
        for n in range(1, n_max + 1):
            for rest in itertools.combinations_with_replacement(us, n):
                yield LensSpace(p, (1,) + rest)


# ---------------------------------------------------------------------------
# examples


def example_tables(p_max: int = 12, n_max: int = 5) -> list[Check]:
    c1 = _Collector("k_a, h_a, h~_a on L_p(1,...,1)")
    c2 = _Collector("k_a, h_a, h~_a on L_p(1,-1,...,1,-1)")
    for p in range(2, p_max + 1):
        for n in range(1, n_max + 1):
            lens = ones(p, n)
            for a in classes(lens)[:-1]:
                j = a.j
                tag = f"{lens}, j={j}"
                ka = Fraction(2 * j * (n + 1), p) - n
                c1.eq(k_a(lens, a), ka, f"k_a[{tag}]")
                if 2 * j < p:
                    want = (ka + n, ka + n)
                elif 2 * j == p:
                    want = (Fraction(0), Fraction(n + 1))
                else:
                    want = (ka - 1, ka - 1)
                c1.eq((h_a(lens, a), h_tilde_a(lens, a)), want, f"(h_a, h~_a)[{tag}]")
            if p > 2 and n % 2 == 1:
                lens = alternating(p, n)
                for a in classes(lens)[:-1]:
                    tag = f"{lens}, j={a.j}"
                    c2.eq(k_a(lens, a), 1, f"k_a[{tag}]")
                    square_zero = (2 * a.j) % p == 0
                    want = (Fraction(0), Fraction(n + 1) if square_zero else Fraction(n + 1, 2))
                    c2.eq((h_a(lens, a), h_tilde_a(lens, a)), want, f"(h_a, h~_a)[{tag}]")
    return [c1.result(), c2.result()]


def l5_11_values() -> Check:
    c = _Collector("L^5_11(1,1,1), j=5")
    lens = ones(11, 2)
    a = homotopy_class(lens, 5)
    c.eq(chern_order(lens), 11, "N")
    c.eq(a.homotopy_weights, (5, 5, 5), "homotopy weights")
    c.eq(k_a(lens, a), Fraction(8, 11), "k_a")
    c.eq(h_a(lens, a), Fraction(30, 11), "h_a")
    c.eq(h_tilde_a(lens, a), Fraction(30, 11), "h~_a")
    c.eq(dyn.hyperbolic_index_eq(2, 11, 5), Fraction(8, 11), "hyperbolic orbit index")
    c.expect(dyn.hyperbolic_index_eq(2, 11, 5) < h_a(lens, a), "hyperbolic index below h_a")
    return c.result()


def l3_4_values() -> Check:
    c = _Collector("L^3_4(1,1)")
    lens = ones(4, 1)
    c.eq(chern_order(lens), 2, "N")
    a1, a2 = homotopy_class(lens, 1), homotopy_class(lens, 2)
    c.eq((k_a(lens, a1), h_a(lens, a1), h_tilde_a(lens, a1)), (0, 1, 1), "j=1 (k_a, h_a, h~_a)")
    c.eq(positivity(lens, a1), (True, True), "j=1 positivity")
    c.eq(dyn.sharp_orbit_l34().index, k_a(lens, a1) + 1, "sharp orbit index")
    c.eq((k_a(lens, a2), h_a(lens, a2), h_tilde_a(lens, a2)), (1, 0, 2), "j=2 (k_a, h_a, h~_a)")
    c.eq(positivity(lens, a2), (True, False), "j=2 positivity")
    return c.result()


def suite_examples() -> list[Check]:
    return example_tables() + [l5_11_values(), l3_4_values()]


# ---------------------------------------------------------------------------
# sharpness


def suite_sharpness(n_max: int = 5, p_max: int = 12) -> list[Check]:
    c1 = _Collector("hyperbolic orbit at index h_a on L_p(1,...,1): no violation")
    for n in range(1, n_max + 1):
        for p in range(3, p_max + 1):
            orbit = dyn.sharp_hyperbolic_orbit(n, p)
            a = homotopy_class(orbit.lens, 1)
            c1.eq(orbit.index, h_a(orbit.lens, a), f"index = h_a [{orbit.lens}]")
            c1.eq(orbit.index, h_tilde_a(orbit.lens, a), f"index = h~_a [{orbit.lens}]")
            for strict in (False, True):
                rep = dyn.check_main_theorem(orbit, strict)
                c1.eq(rep.violations, (), f"violations [{orbit.lens}, strict={strict}]")
    c2 = _Collector("hyperbolic orbit at index k_a + 1 on L^3_4(1,1): no violation")
    orbit = dyn.sharp_orbit_l34()
    for strict in (False, True):
        c2.eq(dyn.check_main_theorem(orbit, strict).violations, (), f"violations strict={strict}")
    c3 = _Collector("ellipsoid attains k_a")
    for lens in lens_sweep(7, 3):
        for a in classes(lens)[:-1]:
            c3.eq(ellipsoid_min_index(lens, a), k_a(lens, a), f"{lens}, j={a.j}")
    return [c1.result(), c2.result(), c3.result()]


# ---------------------------------------------------------------------------
# counterexamples


def dc_sweep(n: int, p: int, delta: int, eps: Fraction, q_factor: int = 10,
             t_step: Fraction = Fraction(1)) -> tuple[int, str | None]:
    """Evaluate the index inequality for q in [p, q_factor p] and T_G on a grid.

    Returns the number of cases and the first failing one, if any.
    """
    count = 0
    for q in range(p, q_factor * p + 1):
        T = t_step
        while T <= q:
            count += 1
            if not dyn.dc_inequality_check(n, p, delta, eps, q, T):
                return count, f"n={n}, p={p}, Delta={delta}, eps={eps}, q={q}, T_G={T}"
            T += t_step
    return count, None


def suite_counterexamples(n_max: int = 5, p_max: int = 12) -> list[Check]:
    c1 = _Collector("elliptic orbit below k_a: exactly index_below_k_a")
    c2 = _Collector("index inequality for contractible orbits (integral T_G)")
    c3 = _Collector("index inequality for contractible orbits (T_G on a 1/4 grid)")
    for n in range(1, n_max + 1):
        for p in range(3, p_max + 1):
            delta = dyn.delta_search(n, p)
            if delta is None:
                continue
            eps = Fraction(1, (2 * n - 1) * p + 1)
            orbit = dyn.orbit_below_k_a(n, p, delta, eps)
            a = homotopy_class(orbit.lens, p - 1)
            c1.eq(k_a(orbit.lens, a), n + 2 - Fraction(2 * n + 2, p), f"k_a [{orbit.lens}]")
            c1.eq(toric_orbit_index(orbit.lens, a, 1),
                  Fraction((2 * n + 2) * (p - 1), p) + 2 - n, f"toric index [{orbit.lens}]")
            c1.eq(dyn.check_main_theorem(orbit).violations, (dyn.INDEX_BELOW_K,),
                  f"violations [{orbit.lens}]")
            if n <= 3 and p <= 8:
                c2.batch(*dc_sweep(n, p, delta, eps))
                c3.batch(*dc_sweep(n, p, delta, eps, q_factor=3, t_step=Fraction(1, 4)))
    c4 = _Collector("hyperbolic orbit on L^5_11(1,1,1), j=5")
    orbit = dyn.hyperbolic_orbit(2, 11, 5)
    c4.eq(orbit.index, k_a(orbit.lens, homotopy_class(orbit.lens, 5)), "index = k_a")
    c4.eq(dyn.check_main_theorem(orbit).violations,
          (dyn.HYPERBOLIC_BELOW_H, dyn.NOT_ELLIPTIC_AT_K), "violations")
    c5 = _Collector("hyperbolic orbit on L^29_5(1,...,1), j=2")
    orbit = dyn.hyperbolic_orbit(14, 5, 2)
    c5.eq(chern_order(orbit.lens), 1, "vanishing first Chern class")
    c5.eq(orbit.index, h_a(orbit.lens, homotopy_class(orbit.lens, 2)) - 2, "index = h_a - 2")
    c5.eq(dyn.check_main_theorem(orbit).violations, (dyn.HYPERBOLIC_BELOW_H,), "violations")
    c6 = _Collector("even Delta exists exactly on the admissible set")
    for n in range(1, 11):
        for p in range(2, 31):
            d = dyn.delta_search(n, p)
            c6.eq(d is not None, dyn.delta_admissible(n, p), f"n={n}, p={p}")
            if d is not None:
                gap = d - Fraction(2 * n + 2, p)
                c6.expect(d % 2 == 0 and Fraction(2 * n + 4, p) <= gap < 2 * n + 2 - Fraction(2 * n + 2, p),
                          f"Delta={d} outside the window for n={n}, p={p}")
    return [c.result() for c in (c1, c2, c3, c4, c5, c6)]


# ---------------------------------------------------------------------------
# properties (reduced sizes; the full sizes live in the test suite)


def random_rotation_path(rng: random.Random, max_half_dim: int = 6, max_speed: int = 20,
                         max_den: int = 40) -> RotationPath:
    planes = []
    for _ in range(rng.randint(1, max_half_dim)):
        q = rng.randint(1, max_den)
        planes.append(Fraction(rng.randint(-max_speed * q, max_speed * q), q))
    return RotationPath.from_planes(planes)


def suite_properties(seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    c1 = _Collector("Bott iteration formula and mean index")
    for _ in range(100):
        path = random_rotation_path(rng)
        b = bott_function(path)
        for k in range(1, 21):
            c1.eq(cz_index(path.iterate(k)), b.root_sum(k), f"{path}, k={k}")
        c1.eq(b.integral(), mean_index(path), f"mean index of {path}")
    c2 = _Collector("Bott function of the twist path")
    for lens in lens_sweep(7, 3):
        N = chern_order(lens)
        for a in classes(lens)[:-1]:
            b = bott_function(twist_ga(lens, a))
            be = bott_function(twist_ga_eps(lens, a, default_eps(lens, a)))
            tag = f"{lens}, j={a.j}"
            c2.eq(b.value_at_one, N * (k_a(lens, a) - 1), f"B(1) [{tag}]")
            c2.eq(b.max_off_one(), N * h_a(lens, a), f"max B [{tag}]")
            c2.eq(be.max_off_one(), N * h_tilde_a(lens, a), f"max B_eps [{tag}]")
    c3 = _Collector("positive classes of L(p, q)")
    for p in range(2, 31):
        for q in units(p):
            lens = LensSpace(p, (1, q))
            found = [a.j for a, _ in find_positive_classes(lens)]
            minus_one = (q + 1) % p == 0
            c3.eq(bool(found), not (minus_one and p % 2 == 1), f"existence [{lens}]")
            if minus_one and p % 2 == 0:
                c3.eq(found, [p // 2], f"unique positive class [{lens}]")
    c4 = _Collector("toric index closed form vs engine")
    for lens in lens_sweep(6, 2):
        for a in classes(lens):
            for m in range(1, 4):
                if gcd(a.j, m) == 1:
                    c4.eq(toric_orbit_index(lens, a, m), toric_orbit_index_engine(lens, a, m),
                          f"{lens}, j={a.j}, m={m}")
    c5 = _Collector("minimal ESH degree equals k_a on L_p(1,...,1)")
    for p in range(2, 13):
        for n in range(1, 5):
            lens = ones(p, n)
            for a in classes(lens):
                c5.eq(min_degree(graded_ranks(n, p, a.j, 2)), k_a(lens, a), f"{lens}, j={a.j}")
    c6 = _Collector("carrier degrees below h_a")
    for n in range(1, 11):
        for p in range(2, 13):
            c6.eq(carrier_degrees(n, p)[1], (n + 1) // 2, f"n={n}, p={p}")
    return [c.result() for c in (c1, c2, c3, c4, c5, c6)]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "examples": suite_examples,
    "sharpness": suite_sharpness,
    "counterexamples": suite_counterexamples,
    "properties": suite_properties,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    return SUITES[name]()
