"""theta_3 at imaginary argument, its imaginary transformation, the chi_4
Lambert series, Ramanujan's n = 0 identity, and the theta-integral route to E(s).

Throughout, ``x`` is the real variable with theta_3(0 | i x / pi) = 1 + 2 sum_{m>=1} e^(-m^2 x).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .options import DEFAULT_OPTIONS, DomainError, EvalOptions, QuadratureError

LOGPI = math.log(math.pi)


@dataclass(frozen=True)
class ThetaOptions:
    series_tol: float = 1e-17
    max_m: int = 100_000

    def __post_init__(self):
        if self.series_tol <= 0 or self.max_m < 1:
            raise ValueError("series_tol must be > 0 and max_m >= 1")

    def gaussian_cutoff(self, x_min: float) -> int:
        # e^(-m^2 x) < series_tol beyond this index
        m = math.ceil(math.sqrt(math.log(1.0 / self.series_tol) / x_min)) + 2
        if m > self.max_m:
            raise DomainError(f"x={x_min} needs {m} theta terms > max_m={self.max_m}")
        return m

    def lambert_cutoff(self, x_min: float) -> int:
        # 1/(e^(mx) - 1) < 2 e^(-mx) < series_tol beyond this index
        m = math.ceil(math.log(2.0 / self.series_tol) / x_min) + 2
        if m > self.max_m:
            raise DomainError(f"x={x_min} needs {m} Lambert terms > max_m={self.max_m}")
        return m


DEFAULT_THETA = ThetaOptions()


def _check_x(x: float) -> float:
    x = float(x)
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    return x


def theta3(x: float, topts: ThetaOptions = DEFAULT_THETA) -> float:
    """theta_3(0 | i x / pi)."""
    x = _check_x(x)
    m = np.arange(topts.gaussian_cutoff(x), 0, -1, dtype=float)
    return 1.0 + 2.0 * math.fsum(np.exp(-m * m * x))


def theta3_sq_minus_1(x: float, topts: ThetaOptions = DEFAULT_THETA) -> float:
    """theta_3(0 | i x/pi)^2 - 1, as (2S)(2 + 2S) with S = sum e^(-m^2 x) to avoid 1 + tiny - 1."""
    x = _check_x(x)
    m = np.arange(topts.gaussian_cutoff(x), 0, -1, dtype=float)
    S = math.fsum(np.exp(-m * m * x))
    return 4.0 * S * (1.0 + S)


def jacobi_transform_residual(x: float, topts: ThetaOptions = DEFAULT_THETA) -> float:
    """|theta_3(0|ix/pi)^2 - (pi/x) theta_3(0|i pi/x)^2|, the right side evaluated at x -> pi^2/x."""
    x = _check_x(x)
    lhs = theta3(x, topts) ** 2
    rhs = math.pi / x * theta3(math.pi ** 2 / x, topts) ** 2
    return abs(lhs - rhs)


def chi4(m):
    """The non-principal character mod 4 (works elementwise on integer arrays)."""
    r = np.asarray(m) % 4
    return np.where(r == 1, 1, np.where(r == 3, -1, 0))


def lambert_sum(x: float, topts: ThetaOptions = DEFAULT_THETA) -> float:
    """sum_{m>=1} chi_4(m) / (e^(mx) - 1)."""
    x = _check_x(x)
    m = np.arange(1, topts.lambert_cutoff(x) + 1, 2, dtype=float)
    terms = np.where(m % 4 == 1, 1.0, -1.0) / np.expm1(m * x)
    return math.fsum(terms[::-1])


def half_sech_sum(y: float, topts: ThetaOptions = DEFAULT_THETA) -> float:
    """(1/2) sum_{k>=1} 1/cosh(k y)."""
    y = _check_x(y)
    k = np.arange(topts.lambert_cutoff(y), 0, -1, dtype=float)
    return 0.5 * math.fsum(1.0 / np.cosh(k * y))


def ramanujan_identity_residual(x: float, topts: ThetaOptions = DEFAULT_THETA) -> float:
    """|alpha{1/4 + sum chi(k)/(e^(alpha^2 k) - 1)} - beta{1/4 + (1/2) sum 1/cosh(beta^2 k)}|,
    alpha = sqrt(x), beta = pi/sqrt(x)."""
    x = _check_x(x)
    alpha, beta = math.sqrt(x), math.pi / math.sqrt(x)
    lhs = alpha * (0.25 + lambert_sum(alpha * alpha, topts))
    rhs = beta * (0.25 + half_sech_sum(beta * beta, topts))
    return abs(lhs - rhs)


def sech_lambert_residual(y: float, topts: ThetaOptions = DEFAULT_THETA) -> float:
    """|(1/2) sum 1/cosh(k y) - sum chi(m)/(e^(m y) - 1)|, the geometric-series rearrangement."""
    return abs(half_sech_sum(y, topts) - lambert_sum(y, topts))


# Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK qk15)
_XGK = np.array([0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                 0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                 0.207784955007898467600689403773245, 0.0])
_WGK = np.array([0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                 0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                 0.204432940075298892414161999234649, 0.209482141084727828012999174891714])
_WG = np.array([0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                0.381830050505118944950369775488975, 0.417959183673469387755102040816327])

GK_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
GK_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
# Gauss points are the odd-indexed Kronrod nodes (1, 3, 5, 7 from the outside in)
G_WEIGHTS = np.zeros(15)
G_WEIGHTS[[1, 3, 5]] = _WG[:3]
G_WEIGHTS[[13, 11, 9]] = _WG[:3]
G_WEIGHTS[7] = _WG[3]


def gk15(f, a: float, b: float):
    """One Gauss-Kronrod panel: (K15 estimate, |K15 - G7|). ``f`` is vectorized."""
    c, h = 0.5 * (a + b), 0.5 * (b - a)
    fx = f(c + h * GK_NODES)
    k = h * np.sum(GK_WEIGHTS * fx)
    g = h * np.sum(G_WEIGHTS * fx)
    return k, abs(k - g)


def adaptive_gk15(f, a: float, b: float, abs_tol: float, max_depth: int, initial_panels: int = 4):
    """Adaptive bisection with a GK15 kernel per panel.

    Each panel must meet abs_tol scaled by its share of [a, b].  Panel results
    are summed in left-to-right order so the answer is deterministic.
    """
    edges = np.linspace(a, b, initial_panels + 1)
    stack = [(float(lo), float(hi), 0) for lo, hi in zip(edges[:-1], edges[1:])]
    done = []
    width = b - a
    while stack:
        lo, hi, depth = stack.pop()
        val, err = gk15(f, lo, hi)
        if err <= abs_tol * (hi - lo) / width or (hi - lo) < 1e-12 * width:
            done.append((lo, val))
            continue
        if depth >= max_depth:
            raise QuadratureError(f"panel [{lo}, {hi}] not converged at depth {max_depth} (err {err:.2e})")
        mid = 0.5 * (lo + hi)
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    done.sort(key=lambda p: p[0])
    return sum(v for _, v in done)


def integral_upper_limit(s: complex, abs_tol: float) -> float:
    """Smallest X >= 40 with 4 e^(-X) (X/pi)^max(sigma, 1-sigma) < 0.01 abs_tol."""
    p = max(s.real, 1.0 - s.real, 0.0)
    X = 40.0
    while 4.0 * math.exp(-X) * (X / math.pi) ** p >= 0.01 * abs_tol:
        X += 1.0
    return X


def _theta_sq_minus_1_vec(x: np.ndarray, topts: ThetaOptions) -> np.ndarray:
    m = np.arange(1, topts.gaussian_cutoff(float(x.min())) + 1, dtype=float)
    S = np.exp(-np.outer(x, m * m)).sum(axis=1)
    return 4.0 * S * (1.0 + S)


def eh_via_integral(s, opts: EvalOptions = DEFAULT_OPTIONS, topts: ThetaOptions = DEFAULT_THETA) -> complex:
    """E(s) from the theta integral, symmetric in s <-> 1 - s by construction:

    E(s) = (1-2^s)/2 (1-2^(1-s))/2 { 1/(s(s-1))
           + int_pi^inf [theta_3(0|ix/pi)^2 - 1] [(x/pi)^s + (x/pi)^(1-s)] d log x }.

    Integrated in u = log(x/pi) on [0, log(X/pi)].  For |Im s| > 30 the initial
    panels are no wider than pi/(4|Im s|) to resolve the oscillation.
    """
    s = complex(s)
    X = integral_upper_limit(s, opts.quadrature_abs_tol)
    U = math.log(X / math.pi)
    t = abs(s.imag)
    panels = 4 if t <= 30 else max(4, math.ceil(U / (math.pi / (4.0 * t))))

    def integrand(u):
        x = math.pi * np.exp(u)
        return _theta_sq_minus_1_vec(x, topts) * (np.exp(s * u) + np.exp((1.0 - s) * u))

    integral = adaptive_gk15(integrand, 0.0, U, opts.quadrature_abs_tol, opts.quadrature_max_depth, panels)
    if abs(s) < 1e-300 or abs(s - 1.0) < 1e-300:
        raise DomainError("the integral route is singular exactly at s = 0, 1; use eh_function")
    h = (1.0 - cmath.exp(s * math.log(2.0))) * (1.0 - cmath.exp((1.0 - s) * math.log(2.0)))
    return h / 4.0 * (1.0 / (s * (s - 1.0)) + integral)
