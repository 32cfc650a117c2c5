import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.stats import qmc

from oracles import radical_inverse
from rieszsphere.concavity import convexity_sets
from rieszsphere.nets import (NET_LABEL, cap_fraction, lambert_lift, lambert_unlift, net_energy_curve,
                              prefix_energies, sobol_points, spherical_net)
from rieszsphere.core import average_pair_energy


def test_initial_points():
    p = sobol_points(4)
    assert p[0].tolist() == [0.0, 0.0] and p[1].tolist() == [0.5, 0.5]


def test_first_dimension_is_radical_inverse_of_gray_code():
    p = sobol_points(1024)
    for i in range(1024):
        assert p[i, 0] == radical_inverse(i ^ (i >> 1))


def test_matches_reference_generator():
    ref = qmc.Sobol(d=2, scramble=False).random(4096)
    assert np.array_equal(sobol_points(4096), ref)


def test_skip_zero():
    assert np.array_equal(sobol_points(5, skip_zero=True), sobol_points(6)[1:])


@pytest.mark.parametrize("k", range(1, 9))
def test_dyadic_balance(k):
    p = sobol_points(2 ** k)
    for dim in (0, 1):
        counts = np.bincount((p[:, dim] * 2 ** k).astype(int), minlength=2 ** k)
        assert np.all(counts == 1)


def test_net_property_elementary_boxes():
    # (0, m, 2)-net: every 2^a x 2^(m-a) box holds exactly one of the first 2^m points
    m = 8
    p = sobol_points(2 ** m)
    for a in range(m + 1):
        i = (p[:, 0] * 2 ** a).astype(int)
        j = (p[:, 1] * 2 ** (m - a)).astype(int)
        assert len(set(zip(i, j))) == 2 ** m


def test_deterministic():
    assert np.array_equal(sobol_points(777), sobol_points(777))


def test_lift_examples():
    x = lambert_lift(np.array([[0.5, 0.5], [0.0, 0.0], [0.3, 1.0]]))
    assert np.allclose(x[0], [-1, 0, 0], atol=1e-15)
    assert x[1].tolist() == [0.0, 0.0, 1.0]
    assert x[2].tolist() == [0.0, 0.0, -1.0]


@given(st.floats(0, 0.999999), st.floats(1e-6, 1 - 1e-6))
def test_lift_is_invertible_off_the_poles(u, v):
    back = lambert_unlift(lambert_lift(np.array([[u, v]])))[0]
    assert back[1] == pytest.approx(v, abs=1e-12)
    du = abs(back[0] - u)
    assert min(du, 1 - du) < 1e-9


def test_cap_measure():
    n = 4096
    x = spherical_net(n)
    assert cap_fraction(x, [0, 0, 1], 0.5) == pytest.approx(0.25, abs=0.01)
    rng = np.random.default_rng(0)
    for _ in range(20):
        c = rng.standard_normal(3)
        c /= np.linalg.norm(c)
        h = rng.uniform(-0.9, 0.9)
        assert abs(cap_fraction(x, c, h) - (1 - h) / 2) <= 3 / math.sqrt(n)


def test_prefix_energies_match_direct():
    x = spherical_net(200)
    pe = prefix_energies(-1.0, x, block=37)
    for m in (2, 3, 50, 200):
        assert pe[m - 2] == pytest.approx(average_pair_energy(-1.0, x[:m]), abs=1e-14)


def test_net_energy_curve():
    t = net_energy_curve(-1.0, 2048)
    assert t.label == NET_LABEL
    assert t.ns()[0] == 2 and t.ns()[-1] == 2048
    assert abs(t.v(2048) + 1 / 3) <= 1e-3
    rep = convexity_sets(t)
    assert rep.c_plus and rep.c_minus


def test_net_is_never_below_minimal_energies():
    from rieszsphere.minimize import MinimizeOptions, scan
    t = net_energy_curve(-1.0, 13)
    opt, _ = scan(-1.0, 2, 13, MinimizeOptions(restarts=8, grad_tol=1e-7, polish_tol=None))
    assert all(t.v(n) >= opt.v(n) - 1e-12 for n in range(2, 14))


def test_pole_point_gives_infinite_rows_only_when_coincident():
    t = net_energy_curve(1.0, 64)
    assert all(math.isfinite(t.v(n)) for n in t.ns())
    with pytest.raises(ValueError):
        net_energy_curve(1.0, 2)
