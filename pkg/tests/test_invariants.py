from fractions import Fraction as F

import pytest

from lensindex.errors import TrivialClass
from lensindex.invariants import (class_invariants, find_positive_classes, h_a, h_tilde_a, k_a,
                                  multiplicities, positivity, w_minus, w_plus)
from lensindex.lens import LensSpace, homotopy_class

from oracles import k_a_oracle


def test_k_a_trivial_class_is_n_plus_2():
    lens = LensSpace(7, (1, 2, 3))
    assert k_a(lens, homotopy_class(lens, 7)) == 4


def test_k_a_matches_direct_count():
    for p, ws in [(7, (1, 2, 3)), (9, (1, -4, 2, 1)), (10, (1, 3)), (12, (1, 5, -5))]:
        lens = LensSpace(p, ws)
        for j in range(1, p):
            assert k_a(lens, homotopy_class(lens, j)) == k_a_oracle(p, ws, j)


def test_counts_and_multiplicities():
    lens = LensSpace(8, (1, 3, -3, 1))
    a = homotopy_class(lens, 4)
    assert a.homotopy_weights == (4, 4, 4, 4)
    assert (w_plus(a), w_minus(a)) == (4, 0)
    m = multiplicities(lens, a)
    # weight p/2 counts towards nu but towards mu~
    assert m.abs_values == (4,)
    assert (m.mu, m.nu, m.mu_tilde, m.nu_tilde) == ((0,), (4,), (4,), (0,))
    assert h_a(lens, a) == k_a(lens, a) - 1
    assert h_tilde_a(lens, a) == k_a(lens, a) - 1 + 4


def test_mixed_sign_thresholds():
    lens = LensSpace(7, (1, 2, 3))
    a = homotopy_class(lens, 1)
    # weights 1, 2, 3 all positive: k_a = -3 + 1 + 12/7
    assert k_a(lens, a) == F(-2) + F(12, 7)
    assert h_a(lens, a) == k_a(lens, a) - 1 + 3
    b = homotopy_class(lens, 3)
    assert b.homotopy_weights == (3, -1, 2)
    # sorted |w|: 1 (-), 2 (+), 3 (+)
    assert h_a(lens, b) == k_a(lens, b) - 1 + 1
    # tilde terms: 0, 1 - 1, 2 - 1
    assert h_tilde_a(lens, b) == k_a(lens, b) - 1 + 1


def test_trivial_class_rejected():
    lens = LensSpace(5, (1, 1))
    a = homotopy_class(lens, 5)
    for fn in (h_a, h_tilde_a, positivity):
        with pytest.raises(TrivialClass):
            fn(lens, a)
    inv = class_invariants(lens, a)
    assert inv.h_a is None and inv.positive is None and inv.k_a == 3


def test_positivity_and_search():
    lens = LensSpace(4, (1, 1))
    assert positivity(lens, homotopy_class(lens, 1)) == (True, True)
    assert positivity(lens, homotopy_class(lens, 2)) == (True, False)
    assert positivity(lens, homotopy_class(lens, 3)) == (False, False)
    assert [(a.j, s) for a, s in find_positive_classes(lens)] == [(1, True), (2, False)]
    assert find_positive_classes(LensSpace(5, (1, -1))) == []
    assert [a.j for a, _ in find_positive_classes(LensSpace(6, (1, -1)))] == [3]


def test_as_dict_prints_fractions_as_strings():
    lens = LensSpace(11, (1, 1, 1))
    d = class_invariants(lens, homotopy_class(lens, 5)).as_dict()
    assert d["k_a"] == "8/11" and d["h_a"] == "30/11" and d["N"] == 11
    assert d["homotopy_weights"] == [5, 5, 5]
