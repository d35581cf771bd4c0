import math

import numpy as np
import pytest

import sinrmc


def test_closed_forms():
    assert sinrmc.erfc(0.0) == 1.0
    assert sinrmc.erfc(1.0) == pytest.approx(math.erfc(1.0), abs=1e-15)
    assert sinrmc.expected_connect_count(1.0, 1.0) == pytest.approx(0.601692, abs=1e-6)
    assert sinrmc.expected_connect_count(1.0, 2.0) == pytest.approx(
        sinrmc.expected_connect_count_quad(1.0, 2.0), abs=1e-8
    )
    assert sinrmc.poisson_entropy(math.e) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        sinrmc.poisson_entropy(-1.0)


def test_optimal_pair_and_profile():
    mu_r, mu_t = sinrmc.optimal_pair(0.5)
    assert abs(mu_r - 0.832) < 0.05
    assert abs(mu_t - 0.984) < 0.05
    assert sinrmc.optimal_pair(0.7) == (1.0, 1.0)
    r, lam = sinrmc.lambda_profile(50)
    assert r.shape == lam.shape == (50,)
    assert lam[0] == lam[-1] == 1.0
    assert lam.max() > 1.3


def test_sampling_is_reproducible():
    a = sinrmc.sample_square(10.0, 1.0, 7)
    b = sinrmc.sample_square(10.0, 1.0, 7)
    assert a.shape[1] == 2
    np.testing.assert_array_equal(a, b)
    assert np.all(np.abs(a) <= 5.0)
    d = sinrmc.sample_disk(3.0, 2.0, 8)
    assert np.all(np.hypot(d[:, 0], d[:, 1]) <= 3.0)
    assert sinrmc.derive_replicate_seed(42, 1, 0) == 0x123E8C5AF9AC4AE3


def test_geometry():
    p = sinrmc.ModelParams(trunc_b=math.inf)
    assert sinrmc.total_field((0.0, 0.0), np.array([[1.0, 0.0]]), p) == pytest.approx(2.0)
    tx = np.array([[0.0, 0.0]])
    assert sinrmc.sinr(0, (2 ** 0.25, 0.0), tx, p) == pytest.approx(0.5)
    rx = np.array([[0.5, 0.0], [1.5, 0.0]])
    assert sinrmc.connectable_receivers(0, tx, rx, p) == [0]
    assert sinrmc.evaluate_functional(tx, rx, 25.0, p) == pytest.approx(1 / 625)
    q = sinrmc.ModelParams(t=0.002, trunc_b=math.inf)
    area = sinrmc.good_region_area(np.empty((0, 2)), q, 0.05)
    assert area == pytest.approx(math.pi / math.sqrt(0.002), rel=0.01)
    with pytest.raises(ValueError):
        sinrmc.ModelParams(alpha=2.0)


def test_estimators():
    p = sinrmc.ModelParams()
    plain = sinrmc.estimate_event(p, n=5.0, a=0.5, runs=500, seed=1, margin=2.0)
    again = sinrmc.estimate_event(p, n=5.0, a=0.5, runs=500, seed=1, margin=2.0, workers=2)
    assert plain["estimate"] == again["estimate"]
    assert plain["variance"] == again["variance"]
    tilted = sinrmc.estimate_event(p, n=5.0, a=0.5, runs=500, seed=1, margin=2.0, tilt=(0.9, 1.0))
    assert 0.0 <= tilted["estimate"]
    iso = sinrmc.estimate_isolation(sinrmc.ModelParams(t=0.1), runs=50, r_out=8.0, radial=True, points=20)
    assert 0.0 < iso["estimate"] < 1.0


def test_harness_run():
    code, out, err = sinrmc.run("experiment = lambda-curve\npoints = 5\n")
    assert code == 0, err
    assert out.splitlines()[0] == "r,lambda"
    assert len(out.splitlines()) == 6
    code, out, err = sinrmc.run("experiment = avg-count\ntilt = radial\n")
    assert code == 1
    with pytest.raises(ValueError):
        sinrmc.run("alpha = two")
    assert "table2-is" in sinrmc.preset_names
    assert "tilt = radial" in sinrmc.preset("table2-is")
