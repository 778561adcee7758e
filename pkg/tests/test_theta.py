import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import mp_eh
from zeta_symmetry.options import DomainError, EvalOptions, QuadratureError
from zeta_symmetry.theta import (ThetaOptions, adaptive_gk15, eh_via_integral, gk15, jacobi_transform_residual,
                                 lambert_sum, ramanujan_identity_residual, sech_lambert_residual, theta3,
                                 theta3_sq_minus_1)

GRID = (0.05, 0.1, 0.5, 1.0, math.pi, 10.0, 50.0)


@pytest.mark.parametrize("x", GRID)
def test_theta3_matches_mpmath(x):
    ref = float(mpmath.jtheta(3, 0, mpmath.exp(-x)))
    assert abs(theta3(x) - ref) <= 1e-15 * ref


@pytest.mark.parametrize("x", GRID)
def test_jacobi(x):
    assert jacobi_transform_residual(x) < 1e-11


def test_theta_sq_minus_1_keeps_tiny_values():
    x = 40.0
    assert theta3_sq_minus_1(x) == pytest.approx(4 * math.exp(-x), rel=1e-15)


def test_lambert_brute_force_double_sum():
    x = 0.5
    m = np.arange(1, 200)
    k = np.arange(1, 200)
    chi = np.where(m % 4 == 1, 1.0, np.where(m % 4 == 3, -1.0, 0.0))
    ref = math.fsum((chi[:, None] * np.exp(-x * np.outer(m, k))).ravel())
    assert abs(lambert_sum(x) - ref) < 1e-14


@pytest.mark.parametrize("x", GRID)
def test_ramanujan_and_rearrangement(x):
    assert ramanujan_identity_residual(x) < 1e-11
    assert sech_lambert_residual(x) < 1e-11


def test_domain():
    with pytest.raises(DomainError):
        theta3(0.0)
    with pytest.raises(DomainError):
        lambert_sum(1e-9, ThetaOptions(max_m=1000))


@pytest.mark.parametrize("deg", range(0, 23))
def test_gk15_polynomial_exactness(deg):
    # Kronrod 15 is exact for degree <= 22
    val, _ = gk15(lambda x: x ** deg, 0.0, 1.0)
    assert val == pytest.approx(1.0 / (deg + 1), rel=1e-14)


def test_adaptive_gk15():
    assert abs(adaptive_gk15(np.exp, 0.0, 3.0, 1e-12, 30) - (math.e ** 3 - 1)) < 1e-12
    with pytest.raises(QuadratureError):
        adaptive_gk15(lambda x: np.sin(1 / (x + 1e-12)), 0.0, 1.0, 1e-14, 2)


@pytest.mark.parametrize("s", [0.5 + 5j, 0.5 + 7j, -1.5 + 2j, 2.5 + 15j, 0.3 + 45j])
def test_integral_route_matches_oracle(s):
    ref = complex(mp_eh(s))
    assert abs(eh_via_integral(s) - ref) < 1e-9


def test_integral_route_singular_exactly_at_endpoints():
    with pytest.raises(DomainError):
        eh_via_integral(0.0)


@settings(max_examples=20, deadline=None)
@given(st.floats(-2, 3), st.floats(0, 20))
def test_integral_route_symmetric(x, y):
    s = complex(x, y)
    if abs(s) < 1e-3 or abs(s - 1) < 1e-3:
        return
    assert abs(eh_via_integral(s) - eh_via_integral(1 - s)) < 1e-10
