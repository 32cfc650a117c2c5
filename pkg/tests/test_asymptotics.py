import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import lattice_zeta_hex, random_points
from rieszsphere.asymptotics import (SignDiagnostic, c_s_conjectured, ddu_leading, ddv_bounds_prop1,
                                     ddv_upper_pointwise, ddv_upper_prop2, lattice_coefficient,
                                     log_energy_expansion, monotonicity_complement, residual_omega,
                                     tilde_u_leading, u_band, u_from_v, u_leading, u_leading_terms,
                                     u_table, v_from_u)
from rieszsphere.concavity import second_diff
from rieszsphere.constants import (A_LOG, B_LOG, C_2, C_LOG, C_LOG_EXPANSION, W_LOG,
                                   c_log_closed_form, w_s)
from rieszsphere.core import average_adjusted_energy, average_pair_energy
from rieszsphere.errors import DomainError, UnsupportedRangeError
from rieszsphere.exact import NamedShape, exact_ddv, exact_v, realize
from rieszsphere.tables import EnergyTable


def test_constants():
    assert W_LOG == pytest.approx(-0.1931471806, abs=1e-9)
    assert C_LOG == pytest.approx(-0.05560530494339251850, abs=1e-17)
    assert c_log_closed_form() == pytest.approx(C_LOG, abs=1e-15)
    assert C_2 == -0.08576841030090
    assert A_LOG == pytest.approx(W_LOG / 2, abs=1e-16)
    assert B_LOG == -0.25
    assert C_LOG_EXPANSION == pytest.approx(C_LOG / 2, abs=1e-15)


def test_w_s_derivative_at_zero_is_w_log():
    h = 1e-6
    assert (w_s(h) - w_s(-h)) / (2 * h) == pytest.approx(W_LOG, abs=1e-9)
    assert w_s(0.0) == 1.0
    with pytest.raises(DomainError):
        w_s(2.0)


def test_w_s_is_the_continuum_energy():
    # mean of r^-s over pairs of uniform points: numeric quadrature over the chordal law
    for s in (-1.0, 0.5, 1.0):
        r = np.linspace(0, 2, 200001)[1:]
        dens = r / 2  # density of the chordal distance on the unit sphere
        val = np.trapezoid(r ** (-s) * dens, r) if hasattr(np, "trapezoid") else np.trapz(r ** (-s) * dens, r)
        assert val == pytest.approx(w_s(s), rel=1e-4)


@given(st.floats(-1.9, 1.9).filter(lambda s: abs(s) > 1e-3), st.integers(2, 1000), st.floats(-5, 5))
def test_u_v_round_trip(s, n, v):
    assert v_from_u(s, n, u_from_v(s, n, v)) == pytest.approx(v, abs=1e-12)


@pytest.mark.parametrize("s", [-1.0, 0.0, 1.0])
def test_second_differences_of_u_and_v_agree(s):
    t = EnergyTable.from_values(s, {n: exact_v(n, s).value for n in range(2, 7)})
    u = u_table(t)
    for n in (3, 4, 5):
        assert second_diff(u, n) == pytest.approx(second_diff(t, n), abs=1e-15)


def test_u_matches_adjusted_average():
    x = realize(NamedShape("octahedron"))
    for s in (-1.0, 0.0, 1.0):
        assert u_from_v(s, 6, average_pair_energy(s, x)) == pytest.approx(average_adjusted_energy(s, x), abs=1e-14)


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("s", [-1.5, -1.0, -0.5])
def test_two_sided_bound_contains_exact_ddv(n, s):
    rep = ddv_bounds_prop1(s, n, exact_v(n, s).value, exact_ddv(n, s).value)
    assert rep.satisfied


def test_two_sided_bound_example():
    rep = ddv_bounds_prop1(-1.0, 3, 1 - math.sqrt(3))
    assert rep.lower == pytest.approx(-math.sqrt(3) / 2)
    assert rep.upper == pytest.approx(math.sqrt(3) / 6)
    assert rep.satisfied is None


@pytest.mark.parametrize("s", [-1.5, -1.0, -0.5])
def test_upper_bounds_hold(s):
    for n in (3, 4, 5):
        d = exact_ddv(n, s).value
        assert d <= ddv_upper_prop2(s, n, exact_v(n - 1, s).value)
        assert exact_v(n, s).value >= monotonicity_complement(s, n, exact_v(n + 1, s).value)
    for n, kind in ((3, "equilateral_triangle"), (4, "tetrahedron")):
        assert exact_ddv(n, s).value <= ddv_upper_pointwise(s, realize(NamedShape(kind))) + 1e-14


@pytest.mark.parametrize("s", [-1.5, -1.0, -0.3])
def test_pointwise_bound_equals_trial_configuration_difference(s):
    rng = np.random.default_rng(4)
    for n in (3, 6, 11):
        x = random_points(rng, n)
        for ell, ellp in ((0, 1), (2, 2)):
            direct = (average_pair_energy(s, x[np.arange(n) != ell])
                      + average_pair_energy(s, np.vstack([x, x[ellp]])) - 2 * average_pair_energy(s, x))
            assert ddv_upper_pointwise(s, x, ell, ellp) == pytest.approx(direct, abs=1e-13)


def test_pointwise_bound_at_octahedron():
    from rieszsphere.minimize import MinimizeOptions, multi_start
    # N = 7 has a soft mode near s = 0, so a looser gradient tolerance keeps this quick
    v7, _ = multi_start(-1.0, 7, MinimizeOptions(restarts=8, seed=0, grad_tol=1e-7, polish_tol=None))
    d = exact_v(5, -1.0).value - 2 * exact_v(6, -1.0).value + v7.energy
    assert d <= ddv_upper_pointwise(-1.0, realize(NamedShape("octahedron")))


def test_bounds_need_negative_s():
    with pytest.raises(UnsupportedRangeError):
        ddv_bounds_prop1(0.5, 4, -0.3)
    with pytest.raises(UnsupportedRangeError):
        ddv_upper_prop2(0.0, 4, -0.3)


def test_c_s_and_lattice_coefficient():
    cs = c_s_conjectured(4.0)
    assert cs == pytest.approx((math.sqrt(3) / 2) ** 2 * lattice_zeta_hex(4.0, 200), rel=1e-7)
    assert lattice_coefficient(4.0) == pytest.approx(cs / (4 * math.pi) ** 2, rel=1e-14)
    assert c_s_conjectured(4.0) < 0 or c_s_conjectured(4.0) > 0
    diag = c_s_conjectured(1.0)
    assert isinstance(diag, SignDiagnostic) and diag.sign == -1
    with pytest.raises(UnsupportedRangeError):
        c_s_conjectured(-1.0)


def test_ddu_leading_negative_at_log():
    ns = np.unique(np.geomspace(4, 10 ** 6, 400).astype(int))
    assert all(ddu_leading(0.0, int(n)) < 0 for n in ns)


def test_leading_forms():
    v, with_cs = u_leading_terms(0.0, 100)
    assert with_cs and v == u_leading(0.0, 100)
    assert u_leading(1.0, 100) == pytest.approx(w_s(1.0) / 100)
    assert ddu_leading(1.0, 10) == pytest.approx(2 * w_s(1.0) / 1000)
    with pytest.raises(DomainError):
        u_leading(2.5, 10)


def test_tilde_u_matches_readjusted_kernel():
    x = realize(NamedShape("icosahedron"))
    for s in (2.0, 3.0):
        if s == 2:
            u = float(np.mean(0.5 * (np.linalg.norm(x[:, None] - x[None], axis=-1)[np.triu_indices(12, 1)]) ** -2))
        else:
            u = u_from_v(s, 12, average_pair_energy(s, x))
        assert tilde_u_leading(s, 12, u) == pytest.approx(average_adjusted_energy(s, x), abs=1e-12)
    with pytest.raises(UnsupportedRangeError):
        tilde_u_leading(5.0, 10, 0.0)


def test_log_energy_expansion_tracks_octahedron_scale():
    # E_0(N) = N(N-1)/2 * v_0(N); the expansion is asymptotic, so compare growth only
    e6 = 15 * exact_v(6, 0.0).value
    assert log_energy_expansion(6) == pytest.approx(e6, rel=0.05)


def test_u_band_orientation():
    lo, hi = u_band(-1.0, 100, 0.3, 0.7)
    assert lo < hi
    lo2, hi2 = u_band(1.0, 100, 0.3, 0.7)
    assert lo2 < hi2
    lo0, hi0 = u_band(0.0, 100, 0.3, 0.7)
    assert lo0 < hi0
    with pytest.raises(DomainError):
        u_band(1.0, 100, 0.7, 0.3)


def test_residual_omega():
    t = EnergyTable.from_values(0.0, {n: exact_v(n, 0.0).value for n in (2, 3, 4, 6)})
    om = residual_omega(0.0, t)
    assert set(om) == {2, 3, 4, 6}
    assert om[6] == pytest.approx(u_from_v(0.0, 6, t.v(6)) - u_leading(0.0, 6))
