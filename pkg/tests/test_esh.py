from fractions import Fraction as F

import pytest

from lensindex.errors import EmptyTable, OnSpectrum
from lensindex.esh import (GradedRanks, action, carrier_degrees, filtered_ranks, graded_ranks,
                           iterate_index, min_degree, orbit_multiplicities)


def test_iterate_index_and_multiplicities():
    assert iterate_index(2, 11, 1) == F(-16, 11)
    assert iterate_index(1, 2, 3) == 5
    assert orbit_multiplicities(5, 2, 3) == [2, 7, 12]


def test_graded_ranks_l3_2():
    g = graded_ranks(1, 2, 1, 2)
    # iterates 1 and 3, each a CP^1 ladder
    assert g.entries == {F(1): 1, F(3): 1, F(5): 1, F(7): 1}
    assert min_degree(g) == 1


def test_ladders_of_one_class_never_overlap():
    # consecutive iterates in one class differ in index by 2n+2
    for n in range(1, 5):
        for p in range(2, 9):
            for j in range(1, p + 1):
                g = graded_ranks(n, p, j, 4)
                assert set(g.entries.values()) == {1}
                assert len(g.entries) == 4 * (n + 1)


def test_filtered_ranks():
    f = filtered_ranks(1, 2, 1, 2, k_max=1)
    assert f.entries == {F(1): 1, F(3): 1}
    f = filtered_ranks(1, 2, 1, 2)
    # iterates with action m/2 < 2: m = 1, 3
    assert sorted(f.entries) == [1, 3, 5, 7]
    with pytest.raises(OnSpectrum):
        filtered_ranks(1, 2, 1, F(3, 2))
    assert filtered_ranks(1, 2, 1, F(1, 4)).entries == {}
    with pytest.raises(EmptyTable):
        min_degree(filtered_ranks(1, 2, 1, F(1, 4)))


def test_action_scaling():
    assert action(4, 3, F(2)) == 3
    assert action(11, 5, F(1, 2)) == F(5, 44)


def test_json_context():
    d = filtered_ranks(2, 3, F(1, 2), 5, j=2).to_json()
    assert d["context"] == {"n": 2, "p": 3, "class": 2, "k_max": None,
                            "action_bound": "5*pi", "scale": "1/2"}
    assert all(isinstance(r["degree"], str) for r in d["ranks"])
    assert isinstance(graded_ranks(1, 2, 1, 1), GradedRanks)


def test_carrier_degrees():
    degs, count = carrier_degrees(3, 4)
    assert degs == [-1, 1, 3, 5]
    assert count == 2


def test_argument_validation():
    with pytest.raises(ValueError):
        graded_ranks(0, 3, 1, 1)
    with pytest.raises(ValueError):
        graded_ranks(1, 3, 4, 1)
    with pytest.raises(ValueError):
        graded_ranks(1, 3, 1, 0)
    with pytest.raises(ValueError):
        filtered_ranks(1, 3, 0, 1)
