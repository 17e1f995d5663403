import random
from fractions import Fraction as F

import pytest

from lensindex import dynamics as dyn
from lensindex.errors import BadParams, BadSpectrum, PinchingFails, TrivialClass
from lensindex.index import RotationPath
from lensindex.lens import LensSpace


def test_eigen_constructors():
    assert dyn.rotation(F(1, 3), 2).multiplicity == 4
    with pytest.raises(BadSpectrum):
        dyn.hyperbolic(1)
    with pytest.raises(BadSpectrum):
        dyn.hyperbolic(-2)
    assert dyn.hyperbolic(3).to_json() == {"kind": "hyperbolic", "multiplicity": 2, "value": "3"}


def test_orbit_record_validation():
    lens = LensSpace(5, (1, 1))
    with pytest.raises(ValueError):
        dyn.OrbitRecord(lens, 1, 0, 1, 0, (dyn.rotation(F(1, 4)),))
    with pytest.raises(BadSpectrum):
        dyn.OrbitRecord(lens, 1, 1, 1, 1, (dyn.rotation(F(1, 4)),))
    rec = dyn.OrbitRecord(lens, 1, 1, 2, 2, (dyn.Eigen(dyn.Kind.PLUS_ONE, 2),))
    assert rec.support_window == (2, 4)
    assert dyn.classify(rec) == "elliptic"
    bad = dyn.OrbitRecord(LensSpace(5, (1, 1, 1)), 1, 1, 2, 0, (dyn.rotation(F(1, 4)),))
    with pytest.raises(BadSpectrum):
        dyn.classify(bad)


def test_classify_mixed():
    lens = LensSpace(5, (1, 1, 1))
    rec = dyn.OrbitRecord(lens, 1, 1, 2, 0, (dyn.rotation(F(1, 4)), dyn.hyperbolic(2)))
    assert dyn.classify(rec) == "neither"


def test_counterexample_presets():
    orbit = dyn.orbit_below_k_a(3, 7, dyn.delta_search(3, 7), F(1, 50))
    assert dyn.classify(orbit) == "elliptic"
    assert dyn.check_main_theorem(orbit).violations == (dyn.INDEX_BELOW_K,)
    rep = dyn.check_main_theorem(dyn.hyperbolic_orbit(2, 11, 5))
    assert rep.violations == (dyn.HYPERBOLIC_BELOW_H, dyn.NOT_ELLIPTIC_AT_K)
    assert rep.thresholds["h_a"] == F(30, 11)
    rep = dyn.check_main_theorem(dyn.hyperbolic_orbit(14, 5, 2))
    assert rep.violations == (dyn.HYPERBOLIC_BELOW_H,)
    j = rep.to_json()
    assert j["violations"] == ["hyperbolic_below_h"] and j["orbit"]["index"] == "10"


def test_strict_mode_uses_tilde_threshold():
    # L_4(1,1), class 2: h_a = 0 < index 1 < h~_a = 2
    lens = LensSpace(4, (1, 1))
    orbit = dyn.OrbitRecord(lens, 2, 1, 1, 0, (dyn.hyperbolic(2),))
    loose = dyn.check_main_theorem(orbit)
    strict = dyn.check_main_theorem(orbit, strict=True)
    # positive but not strictly positive: only the strict version asks for ellipticity
    assert loose.violations == ()
    assert strict.violations == (dyn.HYPERBOLIC_BELOW_H, dyn.NOT_ELLIPTIC_AT_K)


def test_trivial_class_rejected():
    lens = LensSpace(3, (1, 1))
    with pytest.raises(TrivialClass):
        dyn.check_main_theorem(dyn.OrbitRecord(lens, 3, 1, 3, 0, (dyn.hyperbolic(2),)))


def test_spectrum_of_path():
    spec = dyn.spectrum_of_path(RotationPath.from_planes([2, F(3, 2), F(-7, 3)]), 1)
    kinds = [e.kind for e in spec]
    assert kinds == [dyn.Kind.PLUS_ONE, dyn.Kind.MINUS_ONE, dyn.Kind.ROTATION, dyn.Kind.HYPERBOLIC]
    assert spec[2].value == F(1, 3)


def test_elliptic_certificate_consistency():
    rng = random.Random(3)
    seen = 0
    for _ in range(300):
        n = rng.choice([2, 3])
        hyp = rng.randint(0, n - 1)
        planes = [F(rng.randint(-40, 40), rng.randint(1, 8)) for _ in range(n - hyp)]
        cert, elliptic = dyn.certificate_consistent(RotationPath.from_planes(planes),
                                                    2 * rng.randint(-3, 3), hyp)
        if cert:
            seen += 1
            assert elliptic
    assert seen > 0


def test_delta_fn():
    assert dyn.delta_fn(2) == 5
    assert dyn.delta_fn(F(5, 2)) == 5
    assert dyn.delta_fn(F(-1, 3)) == -1


def test_delta_search():
    assert dyn.delta_search(1, 3) is None
    assert dyn.delta_search(1, 5) == 2
    assert dyn.delta_search(3, 7) == 4
    assert dyn.delta_search(2, 2) is None
    with pytest.raises(ValueError):
        dyn.delta_search(0, 5)


def test_dc_inequality_edge_eps():
    for n, p in [(2, 5), (3, 7), (4, 12)]:
        delta = dyn.delta_search(n, p)
        eps = F(2, (2 * n - 1) * p) - F(1, 10**6)
        for q in range(p, 4 * p):
            for T in range(1, q + 1):
                assert dyn.dc_inequality(n, p, delta, eps, q, T).holds


def test_dc_inequality_arguments():
    with pytest.raises(BadParams):
        dyn.dc_inequality(2, 5, 2, F(1, 100), 4, 1)
    with pytest.raises(BadParams):
        dyn.dc_inequality(2, 5, 2, F(1, 100), 5, 6)
    with pytest.raises(BadParams):
        dyn.dc_inequality(2, 5, 2, 0, 5, 1)
    r = dyn.dc_inequality(2, 5, 4, F(1, 100), 5, 1)
    assert r.rhs == 8 - F(6, 5)


def test_pinching():
    d = dyn.PinchingData(1, F(3, 2), 2, 1)
    assert dyn.pinching_ok(d)
    assert dyn.cw_min_period(d) == 1
    assert dyn.simplicity_certificate(d, 1, 1)
    with pytest.raises(BadParams):
        dyn.simplicity_certificate(d, 1, F(1, 2))
    with pytest.raises(BadParams):
        dyn.simplicity_certificate(d, 0, 1)
    with pytest.raises(BadParams):
        dyn.PinchingData(2, 1, 2, 1)
    with pytest.raises(PinchingFails):
        dyn.multiplicity_guarantee(1, 2, dyn.PinchingData(1, 2, 2, 1), dyn.H_PINCHED)
    with pytest.raises(BadParams):
        dyn.multiplicity_guarantee(2, 2, d, dyn.H_PINCHED)
    with pytest.raises(BadParams):
        dyn.multiplicity_guarantee(1, 2, d, "convex")
    # p = 1: the sphere
    assert dyn.multiplicity_guarantee(3, 1, dyn.PinchingData(1, F(5, 4), 1, 3), dyn.STRICTLY_CONVEX) == 4
