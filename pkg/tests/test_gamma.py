import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import loggamma as sp_loggamma

from zeta_symmetry.gamma import gamma, log_gamma, stirling_log_gamma
from zeta_symmetry.options import DomainError, PoleError

finite = st.floats(-30, 30, allow_nan=False)


def euler_product_log_gamma(s, M):
    # log Gamma(s) = lim  s log M - log s - sum_{k<=M} [log(s+k) - log k]   (Gauss limit)
    k = np.arange(1, M + 1, dtype=float)
    return s * math.log(M) - cmath.log(s) - np.sum(np.log1p(s / k))


def test_log_gamma_against_richardson_euler_limit():
    s = 0.5 + 6j
    # error ~ c/M; Richardson over M, 2M, 4M removes the first two orders
    M = 200000
    a, b, c = (euler_product_log_gamma(s, m) for m in (M, 2 * M, 4 * M))
    r1, r2 = 2 * b - a, 2 * c - b
    ref = (4 * r2 - r1) / 3
    got = log_gamma(s)
    # equal modulo the branch; the Gauss product sums principal logs termwise
    diff = got - ref
    assert abs(diff.real) < 1e-9
    assert abs(math.remainder(diff.imag, 2 * math.pi)) < 1e-9


@pytest.mark.parametrize("s", [0.5 + 6j, 3.3 - 2j, -4.7 + 0.3j, 0.01 + 100j, 12 + 0.5j, -0.5 - 30j])
def test_log_gamma_matches_scipy(s):
    assert abs(log_gamma(s) - sp_loggamma(s)) < 1e-12 * max(1, abs(sp_loggamma(s)))


@pytest.mark.parametrize("s", [0.5, 1.5 + 2j, -2.5 + 1j, 7.25 - 3j, 0.2 + 40j])
def test_gamma_matches_mpmath(s):
    ref = complex(mpmath.gamma(s))
    # relative error grows like eps * |log Gamma|
    assert abs(gamma(s) - ref) <= 1e-12 * abs(ref)


def test_gamma_half_is_sqrt_pi():
    assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-15


@pytest.mark.parametrize("n", [0, -1, -2, -17])
def test_poles(n):
    with pytest.raises(PoleError):
        gamma(n)
    with pytest.raises(PoleError):
        log_gamma(n)


def test_stirling_domain_and_accuracy():
    with pytest.raises(DomainError):
        stirling_log_gamma(0.5)
    with pytest.raises(DomainError):
        stirling_log_gamma(-20 + 0.1j)
    assert abs(stirling_log_gamma(10) - log_gamma(10)) < 0.01
    assert abs(stirling_log_gamma(0.5 + 100j) - log_gamma(0.5 + 100j)) < 0.001
    # leading-order form: remainder is 1/(12 s) - 1/(360 s^3) + O(s^-5)
    s = 30 + 40j
    assert abs(stirling_log_gamma(s) + 1 / (12 * s) - 1 / (360 * s ** 3) - log_gamma(s)) < 1e-11


@settings(max_examples=200, deadline=None)
@given(finite, finite)
def test_recurrence(x, y):
    s = complex(x, y)
    if abs(y) < 0.2 and abs(x - round(x)) < 0.2:
        return
    try:
        lhs = gamma(s + 1)
    except OverflowError:
        return
    assert abs(lhs - s * gamma(s)) <= 1e-12 * abs(lhs)


@settings(max_examples=200, deadline=None)
@given(finite, st.floats(0.2, 30))
def test_conjugate_exact(x, y):
    s = complex(x, y)
    assert gamma(s.conjugate()) == gamma(s).conjugate()
    assert log_gamma(s.conjugate()) == log_gamma(s).conjugate()


@settings(max_examples=200, deadline=None)
@given(st.floats(-15, 15), st.floats(0.2, 15))
def test_reflection(x, y):
    s = complex(x, y)
    lhs = gamma(s) * gamma(1 - s)
    rhs = math.pi / cmath.sin(math.pi * s)
    assert abs(lhs - rhs) <= 1e-12 * abs(rhs)


@settings(max_examples=100, deadline=None)
@given(st.floats(-20, 20), st.floats(-60, 60))
def test_log_gamma_continuous_branch(x, y):
    # same branch as scipy's continuous loggamma, not just the same value mod 2 pi i
    s = complex(x, y)
    if abs(y) < 0.2 and abs(x - round(x)) < 0.2:
        return
    ref = sp_loggamma(s)
    assert abs(log_gamma(s) - ref) < 1e-11 * max(1.0, abs(ref))
