import math

import mpmath
import pytest
from hypothesis import given, strategies as st
from scipy.special import zeta as scipy_zeta

from oracles import lattice_zeta_hex
from rieszsphere.errors import UnsupportedRangeError
from rieszsphere.zeta import dirichlet_L3, hurwitz_zeta, riemann_zeta, zeta_hexagonal


def test_basel_and_zeta4():
    assert riemann_zeta(2.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-15)
    assert riemann_zeta(4.0) == pytest.approx(math.pi ** 4 / 90, rel=1e-15)


@given(st.floats(1.5, 30.0), st.floats(0.01, 1.0))
def test_hurwitz_matches_scipy(x, a):
    assert hurwitz_zeta(x, a) == pytest.approx(float(scipy_zeta(x, a)), rel=1e-13)


@pytest.mark.parametrize("x", [1.01, 1.5, 2.5, 7.0])
def test_hurwitz_matches_mpmath(x):
    for a in (1 / 3, 2 / 3, 1.0):
        assert hurwitz_zeta(x, a) == pytest.approx(float(mpmath.zeta(x, a)), rel=1e-13)


@pytest.mark.parametrize("x", [1.5, 2.0, 3.0])
def test_dirichlet_l3(x):
    ref = float(mpmath.dirichlet(x, [0, 1, -1]))
    assert dirichlet_L3(x) == pytest.approx(ref, rel=1e-13)


def test_l3_at_one_limit():
    # L_{-3}(1) = pi / (3 sqrt 3); approached from above
    assert dirichlet_L3(1.0 + 1e-7) == pytest.approx(math.pi / (3 * math.sqrt(3)), rel=1e-6)


@pytest.mark.parametrize("s", [3.0, 4.0, 6.0])
def test_hexagonal_zeta_against_lattice_sum(s):
    tol = {3.0: 1e-5, 4.0: 1e-6, 6.0: 1e-10}[s]
    assert zeta_hexagonal(s) == pytest.approx(lattice_zeta_hex(s, 200), abs=tol)


def test_domain_errors():
    with pytest.raises(UnsupportedRangeError):
        hurwitz_zeta(1.0, 0.5)
    with pytest.raises(UnsupportedRangeError):
        hurwitz_zeta(2.0, 1.5)
    with pytest.raises(UnsupportedRangeError):
        zeta_hexagonal(2.0)
