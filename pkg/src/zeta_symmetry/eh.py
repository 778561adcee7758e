"""The symmetric entire function

    E(s) = (1 - 2^s) Gamma(s) eta(s) L(s) / pi^s
         = (1 - 2^s)(1 - 2^(1-s)) Gamma(s) zeta(s) L(s) / pi^s  =  h(s) A(s),

together with A(s), the pole-cancelling factor h(s), Riemann's xi(s), and a
seeded property suite.

Evaluation uses the eta form, which is regular at s = 1.  At s = 0 the
product (1 - 2^s) Gamma(s) is rewritten as -(expm1(s log 2)/s) Gamma(s + 1),
so the cancellation is exact rather than extrapolated.  Near the negative
integers, where a pole of Gamma meets a trivial zero of eta or L, the value is
taken from E(1 - s).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .dirichlet import LOG2, LOGPI, _expm1, dirichlet_L, eta, zeta, zeta_times_s_minus_1
from .gamma import gamma
from .options import DEFAULT_OPTIONS, EvalOptions, PoleError, PropertyViolation

EPS = 2.220446049250313e-16
# distance from a non-positive integer inside which E, A, xi are reflected
REFLECT_RADIUS = 0.05
EH_AT_ENDPOINTS = -math.log(2.0) / 4.0


@dataclass(frozen=True)
class EhValue:
    value: complex
    route: str  # "product_formula" | "integral_formula"
    est_error: float


def _near_negative_integer(s: complex, even_only: bool = False) -> bool:
    if s.real > -0.5:
        return False
    n = round(s.real)
    if even_only and n % 2:
        return False
    return abs(s - n) < REFLECT_RADIUS


def h_factor(s, perturb: float = 0.0) -> complex:
    """h(s) = (1 - 2^s)(1 - 2^(1-s)); ``perturb`` is added verbatim (canary for the suites)."""
    s = complex(s)
    return (1.0 - cmath.exp(s * LOG2)) * (1.0 - cmath.exp((1.0 - s) * LOG2)) + perturb


def _one_minus_2s_times_gamma(s: complex, opts: EvalOptions) -> complex:
    if abs(s) < 0.5:
        x = s * LOG2
        # expm1(x)/s = log2 (1 + x/2 + x^2/6 + x^3/24 + ...); the series also survives subnormal s
        q = -LOG2 * (1.0 + x / 2.0 + x * x / 6.0 + x ** 3 / 24.0) if abs(x) < 1e-4 else -_expm1(x) / s
        return q * gamma(s + 1.0, opts)
    return (1.0 - cmath.exp(s * LOG2)) * gamma(s, opts)


def _eh(s: complex, opts: EvalOptions) -> complex:
    if s.imag < 0:
        return _eh(s.conjugate(), opts).conjugate()
    if _near_negative_integer(s):
        return _eh(1.0 - s, opts)
    out = (_one_minus_2s_times_gamma(s, opts) * eta(s, opts) * dirichlet_L(s, opts)
           * cmath.exp(-s * LOGPI))
    return complex(out.real, 0.0) if s.imag == 0 else out


def eh_value(s, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """E(s) as a bare complex number (no error estimate)."""
    return _eh(complex(s), opts)


def eh_function(s, opts: EvalOptions = DEFAULT_OPTIONS) -> EhValue:
    """E(s) with an advisory absolute error estimate.

    est_error = |E| * (4 tol + eps |s| |E'/E|): four factors each good to the
    kernel tolerance, plus the rounding of s itself propagated through the
    logarithmic derivative (one-sided difference).
    """
    s = complex(s)
    v = _eh(s, opts)
    step = 1e-6 * max(1.0, abs(s))
    dv = _eh(s + step, opts)
    if v != 0:
        logderiv = abs(dv - v) / (step * abs(v))
        est = abs(v) * (4.0 * opts.tol + EPS * abs(s) * logderiv)
    else:
        est = abs(dv - v) / step * EPS * max(1.0, abs(s))
    return EhValue(v, "product_formula", est)


def A_function(s, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """A(s) = Gamma(s) zeta(s) L(s) / pi^s; PoleError at s = 0 and s = 1."""
    s = complex(s)
    for p in (0.0, 1.0):
        if abs(s - p) < opts.tol:
            raise PoleError(f"A has a pole at s={p:g}")
    if s.imag < 0:
        return A_function(s.conjugate(), opts).conjugate()
    if _near_negative_integer(s):
        return A_function(1.0 - s, opts)
    out = gamma(s, opts) * zeta(s, opts) * dirichlet_L(s, opts) * cmath.exp(-s * LOGPI)
    return complex(out.real, 0.0) if s.imag == 0 else out


def xi_function(s, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Riemann xi(s) = (s/2)(s-1) pi^(-s/2) Gamma(s/2) zeta(s), written as
    Gamma(s/2 + 1) pi^(-s/2) [(s-1) zeta(s)] so that s = 0 and s = 1 need no limit."""
    s = complex(s)
    if s.imag < 0:
        return xi_function(s.conjugate(), opts).conjugate()
    if _near_negative_integer(s, even_only=True):
        return xi_function(1.0 - s, opts)
    out = gamma(s / 2.0 + 1.0, opts) * cmath.exp(-s * LOGPI / 2.0) * zeta_times_s_minus_1(s, opts)
    return complex(out.real, 0.0) if s.imag == 0 else out


def rel_residual(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


@dataclass
class PropertyResult:
    name: str
    max_residual: float
    witness: complex
    threshold: float

    @property
    def passed(self) -> bool:
        return self.max_residual < self.threshold


def _worst(name, pairs, threshold):
    witness, res = max(pairs, key=lambda p: p[1])
    return PropertyResult(name, float(res), witness, threshold)


def property_suite(sample_count: int = 500, seed: int = 0, opts: EvalOptions = DEFAULT_OPTIONS,
                   perturb: float = 0.0, raise_on_fail: bool = False) -> list[PropertyResult]:
    """Seeded checks of the structural properties of E.

    symmetry      E(s) = E(1-s), relative, s in [-10, 11] x [-40, 40]
    conjugate     E(conj s) = conj E(s)
    critical_real |Im E(1/2 + it)| on t in [0, 50]
    endpoints     E(0) = E(1) = -log(2)/4
    zero_free     min |E(s)| / |h(w) Gamma(w) pi^-w| off the closed strip, w the mirror
                  point with Re w > 1 (passes when > 1e-12)
    real_negative E real and < 0 on the grid -20, -19.9, ..., 20
    factorization E(s) = h(s) A(s), relative
    """
    if sample_count < 100:
        raise ValueError("sample_count must be >= 100")
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-10, 11, sample_count) + 1j * rng.uniform(-40, 40, sample_count)
    results = []

    results.append(_worst("symmetry", [(s, rel_residual(eh_value(s, opts), eh_value(1 - s, opts))) for s in pts], 1e-9))
    results.append(_worst("conjugate", [(s, rel_residual(eh_value(s.conjugate(), opts),
                                                        eh_value(s, opts).conjugate())) for s in pts], 1e-13))
    ts = np.linspace(0.0, 50.0, max(sample_count, 101))
    results.append(_worst("critical_real", [(0.5 + 1j * t, abs(eh_value(0.5 + 1j * t, opts).imag)) for t in ts], 1e-10))
    results.append(_worst("endpoints", [(complex(p), abs(eh_value(p, opts) - EH_AT_ENDPOINTS)) for p in (0.0, 1.0)], 1e-9))

    outside = []
    while len(outside) < 200:
        s = complex(rng.uniform(-10, 11), rng.uniform(-40, 40))
        if s.real > 1.05 or s.real < -0.05:
            outside.append(s)
    # |E| carries the exp(-pi|t|/2) decay of Gamma, so it is measured against the
    # nonvanishing factor h Gamma pi^-w at the mirror point w with Re w > 1;
    # residual = 1e-12 / normalized |E|, so "passes" means the normalized value exceeds 1e-12
    zf = []
    for s in outside:
        w = s if s.real > 0.5 else 1.0 - s
        scale = abs(h_factor(w) * gamma(w, opts) * cmath.exp(-w * LOGPI))
        zf.append((s, 1e-12 / max(abs(eh_value(s, opts)) / scale, 1e-300)))
    results.append(_worst("zero_free", zf, 1.0))

    grid = np.round(np.arange(-200, 201) / 10.0, 10)
    real_pairs = []
    for x in grid:
        v = eh_value(complex(x), opts)
        # any positive value is a violation; scale so that residual >= 1 flags it
        real_pairs.append((complex(x), abs(v.imag) + (1.0 if v.real >= 0 else 0.0)))
    results.append(_worst("real_negative", real_pairs, 1e-10))

    fac = []
    for s in pts:
        if abs(s) < 0.05 or abs(s - 1) < 0.05:
            continue
        fac.append((s, rel_residual(eh_value(s, opts), h_factor(s, perturb) * A_function(s, opts))))
    results.append(_worst("factorization", fac, 1e-10))

    if raise_on_fail:
        for r in results:
            if not r.passed:
                raise PropertyViolation(r.name, r.witness, r.max_residual)
    return results
