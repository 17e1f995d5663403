"""Per-class invariants: k_a, the two hyperbolicity thresholds, positivity."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TrivialClass
from .lens import HomotopyClass, LensSpace, chern_order, classes


def _require_nontrivial(lens: LensSpace, a: HomotopyClass) -> None:
    if a.j == lens.p:
        raise TrivialClass(f"class j={a.j} is the trivial class of {lens}")


def w_plus(a: HomotopyClass) -> int:
    return sum(1 for w in a.homotopy_weights if w > 0)


def w_minus(a: HomotopyClass) -> int:
    return sum(1 for w in a.homotopy_weights if w < 0)


def k_a(lens: LensSpace, a: HomotopyClass) -> Fraction:
    if a.j == lens.p:
        return Fraction(lens.n + 2)
    s = sum(a.homotopy_weights)
    return Fraction(w_minus(a) - w_plus(a) + 1) + Fraction(2 * s, lens.p)


@dataclass(frozen=True)
class WeightMultiplicities:
    abs_values: tuple[int, ...]
    mu: tuple[int, ...]
    nu: tuple[int, ...]
    mu_tilde: tuple[int, ...]
    nu_tilde: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.abs_values)


def multiplicities(lens: LensSpace, a: HomotopyClass) -> WeightMultiplicities:
    _require_nontrivial(lens, a)
    ws = a.homotopy_weights
    p = lens.p
    abs_values = tuple(sorted({abs(w) for w in ws if w != 0}))
    mu, nu, mu_t, nu_t = [], [], [], []
    for v in abs_values:
        half = 2 * v == p
        mu.append(sum(1 for w in ws if w == v and 2 * w != p))
        nu.append(sum(1 for w in ws if w == -v or (half and w == v)))
        mu_t.append(sum(1 for w in ws if w == v))
        nu_t.append(sum(1 for w in ws if w == -v))
    return WeightMultiplicities(abs_values, tuple(mu), tuple(nu), tuple(mu_t), tuple(nu_t))


def h_a(lens: LensSpace, a: HomotopyClass) -> Fraction:
    m = multiplicities(lens, a)
    base = k_a(lens, a) - 1
    best = acc = 0
    for mu_i, nu_i in zip(m.mu, m.nu):
        acc += mu_i - nu_i
        best = max(best, acc)
    return base + best


def h_tilde_a(lens: LensSpace, a: HomotopyClass) -> Fraction:
    m = multiplicities(lens, a)
    base = k_a(lens, a) - 1
    # term j: sum of mu~ up to j minus sum of nu~ strictly before j
    best = None
    ups = downs = 0
    for mu_i, nu_i in zip(m.mu_tilde, m.nu_tilde):
        ups += mu_i
        cand = ups - downs
        best = cand if best is None else max(best, cand)
        downs += nu_i
    assert best is not None
    return base + best


def positivity(lens: LensSpace, a: HomotopyClass) -> tuple[bool, bool]:
    _require_nontrivial(lens, a)
    positive = all(w > 0 for w in a.homotopy_weights)
    strict = positive and all(2 * w != lens.p for w in a.homotopy_weights)
    return positive, strict


@dataclass(frozen=True)
class ClassInvariants:
    j: int
    homotopy_weights: tuple[int, ...]
    w_plus: int
    w_minus: int
    k_a: Fraction
    h_a: Fraction | None
    h_tilde_a: Fraction | None
    positive: bool | None
    strictly_positive: bool | None
    N: int

    def as_dict(self) -> dict:
        def fmt(x: Fraction | None) -> str | None:
            return None if x is None else str(x)

        return {
            "j": self.j,
            "homotopy_weights": list(self.homotopy_weights),
            "w_plus": self.w_plus,
            "w_minus": self.w_minus,
            "k_a": fmt(self.k_a),
            "h_a": fmt(self.h_a),
            "h_tilde_a": fmt(self.h_tilde_a),
            "positive": self.positive,
            "strictly_positive": self.strictly_positive,
            "N": self.N,
        }


def class_invariants(lens: LensSpace, a: HomotopyClass) -> ClassInvariants:
    """All invariants of one class; threshold fields are None for the trivial class."""
    N = chern_order(lens)
    if a.j == lens.p:
        return ClassInvariants(a.j, a.homotopy_weights, 0, 0, k_a(lens, a),
                               None, None, None, None, N)
    pos, strict = positivity(lens, a)
    return ClassInvariants(a.j, a.homotopy_weights, w_plus(a), w_minus(a), k_a(lens, a),
                           h_a(lens, a), h_tilde_a(lens, a), pos, strict, N)


def find_positive_classes(lens: LensSpace) -> list[tuple[HomotopyClass, bool]]:
    out = []
    for a in classes(lens)[:-1]:
        pos, strict = positivity(lens, a)
        if pos:
            out.append((a, strict))
    return out
