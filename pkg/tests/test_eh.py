import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from conftest import mp_eh
from zeta_symmetry.eh import (EH_AT_ENDPOINTS, A_function, eh_function, eh_value, h_factor, property_suite,
                              xi_function)
from zeta_symmetry.options import PoleError

strip = st.complex_numbers(min_magnitude=0, max_magnitude=40, allow_nan=False, allow_infinity=False)


@pytest.mark.parametrize("s", [0.5 + 5j, 0.5 + 7j, 2.3 - 1.1j, -1.7 + 4j, 0.25 + 33j, 5.5 + 0.5j, -6.2 - 9j])
def test_eh_matches_mpmath_product(s):
    ref = complex(mp_eh(s))
    assert abs(eh_value(s) - ref) <= 1e-11 * abs(ref)


def test_critical_line_values():
    assert abs(eh_value(0.5 + 5j) / -2.519281933e-3 - 1) < 1e-9
    assert abs(eh_value(0.5 + 7j) / 8.959203701e-5 - 1) < 1e-9


def test_endpoints_exact():
    assert EH_AT_ENDPOINTS == -math.log(2) / 4
    for s in (0.0, 1.0):
        assert abs(eh_value(s) - EH_AT_ENDPOINTS) < 1e-14


def test_smooth_through_cancellation_points():
    # Taylor oracle: central difference slope across s = 0 agrees on both sides
    for r in (1e-3, 1e-6, 1e-9):
        assert abs(eh_value(r) - EH_AT_ENDPOINTS) < 2 * r
        assert abs(eh_value(1 + 1j * r) - EH_AT_ENDPOINTS) < 2 * r


@pytest.mark.parametrize("s", [-2.0, -3.0, -2.01 + 0.01j, -10.0])
def test_near_negative_integers_finite(s):
    # Gamma's pole cancels against a zero of zeta or L; 25 digits are lost to the offset
    with mpmath.workdps(60):
        ref = complex(mp_eh(mpmath.mpc(s) + mpmath.mpf("1e-25")))
    assert abs(eh_value(s) - ref) <= 1e-11 * abs(ref)


def test_eh_function_record():
    v = eh_function(0.5 + 5j)
    assert v.route == "product_formula"
    assert 0 < v.est_error < 1e-12


def test_xi_values():
    assert abs(xi_function(0) - 0.5) < 1e-14
    assert abs(xi_function(1) - 0.5) < 1e-14
    # xi(2) = (2/2)(2-1) pi^-1 Gamma(1) zeta(2) = pi/6
    assert abs(xi_function(2) - math.pi / 6) < 1e-14


def test_A_poles():
    for p in (0, 1):
        with pytest.raises(PoleError):
            A_function(p)


def test_h_zeros():
    assert abs(h_factor(2j * math.pi / math.log(2))) < 1e-14
    assert abs(h_factor(1 + 2j * math.pi / math.log(2))) < 1e-14
    assert h_factor(0.5, perturb=1e-6) == h_factor(0.5) + 1e-6


@settings(max_examples=150, deadline=None)
@given(st.floats(-8, 9), st.floats(-40, 40))
def test_symmetry_property(x, y):
    s = complex(x, y)
    a, b = eh_value(s), eh_value(1 - s)
    assert abs(a - b) <= 1e-9 * max(abs(a), abs(b), 1e-300)


@settings(max_examples=150, deadline=None)
@given(st.floats(-8, 9), st.floats(0, 40))
def test_conjugate_property(x, y):
    s = complex(x, y)
    assert eh_value(s.conjugate()) == eh_value(s).conjugate()


@settings(max_examples=100, deadline=None)
@given(st.floats(-20, 20))
def test_real_negative_on_real_axis(x):
    # includes subnormal-size x, where the eta reflection used to divide by zero
    v = eh_value(x)
    assert v.imag == 0 and v.real < 0


def test_property_suite_passes():
    results = property_suite(200, seed=3)
    assert {r.name for r in results} == {"symmetry", "conjugate", "critical_real", "endpoints", "zero_free",
                                         "real_negative", "factorization"}
    assert all(r.passed for r in results), [(r.name, r.max_residual) for r in results if not r.passed]


def test_property_suite_detects_perturbation():
    failed = [r.name for r in property_suite(100, seed=0, perturb=1e-6) if not r.passed]
    assert "factorization" in failed


def test_property_suite_minimum_samples():
    with pytest.raises(ValueError):
        property_suite(50)


@pytest.mark.parametrize("s", [5e-324j, 1 - 5e-324j, 1e-300, 1 + 1e-300j, 9e-5j, 1 + 2e-4j])
def test_cancellation_helpers_at_tiny_offsets(s):
    # found by hypothesis: expm1 of a subnormal argument divided by s gave 1 instead of log 2
    assert abs(eh_value(s) - EH_AT_ENDPOINTS) < 1e-3
    assert abs(xi_function(s) - 0.5) < 1e-3
