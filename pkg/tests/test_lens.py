from math import gcd

import pytest
from hypothesis import given, strategies as st

from lensindex.errors import BadModulus, NotCoprime, OutOfRange
from lensindex.lens import (LensSpace, chern_order, classes, homotopy_class, normalize_weights,
                            reduce_mod, units)


def test_reduce_mod_window():
    assert [reduce_mod(x, 4) for x in range(-4, 5)] == [0, 1, 2, -1, 0, 1, 2, -1, 0]
    assert reduce_mod(3, 5) == -2
    assert reduce_mod(-3, 6) == 3


@given(st.integers(2, 60), st.integers(-500, 500))
def test_reduce_mod_property(p, x):
    r = reduce_mod(x, p)
    assert (r - x) % p == 0
    assert -p < 2 * r <= p


def test_lens_validation():
    assert str(LensSpace(11, (1, 1, 1))) == "L^5_11(1,1,1)"
    assert LensSpace(5, (1, -2)).n == 1
    with pytest.raises(BadModulus):
        LensSpace(1, (1,))
    with pytest.raises(NotCoprime):
        LensSpace(4, (1, 2))
    with pytest.raises(OutOfRange):
        LensSpace(5, (1, 3))
    with pytest.raises(OutOfRange):
        LensSpace(5, (2, 1))


def test_normalize_rescales_by_inverse_of_first_weight():
    lens = normalize_weights(7, [3, 6, 2])
    # 3^{-1} = 5 mod 7
    assert lens.weights == (1, 2, 3)
    assert normalize_weights(5, [4, 1]).weights == (1, -1)
    with pytest.raises(NotCoprime):
        normalize_weights(6, [1, 3])


def test_homotopy_classes_and_chern_order():
    lens = LensSpace(11, (1, 1, 1))
    assert homotopy_class(lens, 5).homotopy_weights == (5, 5, 5)
    assert homotopy_class(lens, 7).homotopy_weights == (-4, -4, -4)
    assert homotopy_class(lens, 11).trivial
    assert len(classes(lens)) == 11
    assert chern_order(lens) == 11
    assert chern_order(LensSpace(4, (1, 1))) == 2
    assert chern_order(LensSpace(3, (1, 1))) == 3
    assert chern_order(LensSpace(2, (1, 1))) == 1
    assert chern_order(LensSpace(5, (1, 1, 1, 1, 1))) == 1
    with pytest.raises(OutOfRange):
        homotopy_class(lens, 0)


@given(st.integers(2, 40), st.lists(st.integers(-100, 100), min_size=1, max_size=5))
def test_chern_order_is_least_killing_multiple(p, raw):
    raw = [w for w in raw if gcd(w, p) == 1]
    if not raw:
        return
    lens = normalize_weights(p, raw)
    N = chern_order(lens)
    s = sum(lens.weights)
    assert (N * s) % p == 0
    assert all((m * s) % p for m in range(1, N))


def test_units():
    assert units(8) == [-3, -1, 1, 3]
    assert units(2) == [1]
    assert units(9) == [-4, -2, -1, 1, 2, 4]
