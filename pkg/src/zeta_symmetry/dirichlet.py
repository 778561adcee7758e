"""Riemann zeta, Dirichlet eta and the beta function L(s) = L(s, chi_4).

Right of the imaginary axis all three come from accelerated alternating
series; left of it they are transported by the asymmetric functional
equations

    eta(1-s)/eta(s) = -(2^s - 1) / (pi^s (2^(s-1) - 1)) Gamma(s) cos(pi s/2)
    L(1-s)/L(s)     = (2/pi)^s Gamma(s) sin(pi s/2)
    zeta(s)         = 2^s pi^(s-1) Gamma(1-s) sin(pi s/2) zeta(1-s)

Also here: the Euler-Boole / Euler-Maclaurin tail decompositions with their
explicit magnitude bounds, and an empirical growth sweep in vertical strips.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .accel import alternating_power_sum, alternating_sum, terms_needed
from .gamma import gamma
from .options import DEFAULT_OPTIONS, DomainError, EvalOptions, PoleError

LOG2 = math.log(2.0)
LOGPI = math.log(math.pi)

# |1 - 2^(1-s)| below this triggers the removable-singularity limit for zeta
REMOVABLE_GUARD = 1e-8
RICHARDSON_STEP = 1e-3
# the accelerated series is used for Re s above this, the functional equations below;
# reflecting at Re s = 0 would divide by 2^(-s) - 1 -> 0 in the eta relation
SERIES_SIGMA_MIN = -0.5


def _conj_wrap(fn, s, opts):
    s = complex(s)
    if s.imag < 0:
        return fn(s.conjugate(), opts).conjugate()
    out = fn(s, opts)
    return complex(out.real, 0.0) if s.imag == 0 else out


def _eta_upper(s: complex, opts: EvalOptions) -> complex:
    if s.real >= SERIES_SIGMA_MIN:
        return alternating_power_sum(s, 1.0, 1.0, opts.tol, opts.max_terms)
    # eta(s) from eta(1-s); the prefactor is finite for Re s < 0
    w = 1.0 - s
    ratio = (-(2.0 ** w - 1.0) / (math.pi ** w * (2.0 ** (w - 1.0) - 1.0))
             * gamma(w, opts) * cmath.cos(math.pi * w / 2.0))
    return alternating_power_sum(w, 1.0, 1.0, opts.tol, opts.max_terms) * ratio


def eta(s, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Dirichlet eta, sum (-1)^(n-1) n^(-s), continued to the whole plane."""
    return _conj_wrap(_eta_upper, s, opts)


def _L_upper(s: complex, opts: EvalOptions) -> complex:
    if s.real >= SERIES_SIGMA_MIN:
        return alternating_power_sum(s, 1.0, 2.0, opts.tol, opts.max_terms)
    w = 1.0 - s
    factor = (2.0 / math.pi) ** w * gamma(w, opts) * cmath.sin(math.pi * w / 2.0)
    return alternating_power_sum(w, 1.0, 2.0, opts.tol, opts.max_terms) * factor


def dirichlet_L(s, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Dirichlet beta L(s) = sum (-1)^n (2n+1)^(-s); entire."""
    return _conj_wrap(_L_upper, s, opts)


def _one_minus_pow2(w: complex) -> complex:
    # 1 - 2^w without cancellation near w = 2 pi i k / log 2
    return -cmath.exp(w * LOG2) + 1.0 if abs(w * LOG2) > 0.5 else -_expm1(w * LOG2)


def _expm1(z: complex) -> complex:
    if z.imag == 0:
        return complex(math.expm1(z.real), 0.0)
    # expm1(x+iy) = expm1(x) cos y + (cos y - 1) + i e^x sin y
    x, y = z.real, z.imag
    return complex(math.expm1(x) * math.cos(y) - 2.0 * math.sin(y / 2.0) ** 2, math.exp(x) * math.sin(y))


def _zeta_quotient(s: complex, opts: EvalOptions) -> complex:
    return eta(s, opts) / _one_minus_pow2(1.0 - s)


def _zeta_upper(s: complex, opts: EvalOptions) -> complex:
    if s.real >= SERIES_SIGMA_MIN:
        if abs(s - 1.0) <= 1e-14:
            raise PoleError("zeta has a pole at s=1")
        if abs(_one_minus_pow2(1.0 - s)) < REMOVABLE_GUARD and abs(s - 1.0) > 0.5:
            # 0/0 at s = 1 + 2 pi i k / log 2: symmetric 4-point Richardson limit along t
            d = RICHARDSON_STEP
            avg1 = 0.5 * (_zeta_quotient(s + 1j * d, opts) + _zeta_quotient(s - 1j * d, opts))
            avg2 = 0.5 * (_zeta_quotient(s + 2j * d, opts) + _zeta_quotient(s - 2j * d, opts))
            return (4.0 * avg1 - avg2) / 3.0
        return _zeta_quotient(s, opts)
    w = 1.0 - s
    return (cmath.exp(s * LOG2 + (s - 1.0) * LOGPI) * gamma(w, opts)
            * cmath.sin(math.pi * s / 2.0) * _zeta_upper(w, opts))


def zeta(s, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Riemann zeta; PoleError at s = 1 only."""
    return _conj_wrap(_zeta_upper, s, opts)


def zeta_times_s_minus_1(s, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """(s-1) zeta(s), regular at s = 1 where it equals 1."""
    s = complex(s)
    if abs(s - 1.0) < 0.25:
        # (s-1)/(1 - 2^(1-s)) = x / (log 2 * expm1(x)), x = (1-s) log 2
        x = (1.0 - s) * LOG2
        # Taylor form for tiny x: expm1 of a subnormal x loses all relative precision
        q = (1.0 - x / 2.0 + x * x / 12.0) / LOG2 if abs(x) < 1e-4 else x / (LOG2 * _expm1(x))
        return eta(s, opts) * q
    return (s - 1.0) * zeta(s, opts)


def completed_L(s, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """(4/pi)^((s+1)/2) Gamma((s+1)/2) L(s), invariant under s -> 1-s and real on Re s = 1/2."""
    s = complex(s)
    a = (s + 1.0) / 2.0
    return cmath.exp(a * math.log(4.0 / math.pi)) * gamma(a, opts) * dirichlet_L(s, opts)


@dataclass(frozen=True)
class SeriesTail:
    partial_sum: complex
    boundary_term: complex
    integral_term: complex
    truncation_N: int
    bounds: dict = field(default_factory=dict, compare=False)

    @property
    def value(self) -> complex:
        return self.partial_sum + self.boundary_term + self.integral_term


def L_tail_euler_boole(s, N: int, opts: EvalOptions = DEFAULT_OPTIONS) -> SeriesTail:
    """Split L(s) at N by first-order Euler-Boole summation.

    L(s) = sum_{n<N} (-1)^n (2n+1)^-s + (-1)^N (2N+1)^-s / 2
           - s * int_N^inf E0(-x) (2x+1)^(-s-1) dx,
    with E0(x) = sgn sin(pi x).  On (k, k+1) the sign is -(-1)^k, so the
    integral is an alternating sum of closed-form pieces, which is accelerated.

    ``bounds`` carries the magnitude bounds: ``integral`` = |s|/sigma (2N+1)^-sigma
    and, for sigma < 1, ``total`` = (2N+1)^(1-sigma)/(1-sigma) + (3/2 + t/sigma)(2N+1)^-sigma.
    """
    s = complex(s)
    sigma, t = s.real, abs(s.imag)
    if sigma <= 0:
        raise DomainError("Euler-Boole tail needs Re(s) > 0")
    if N < 1:
        raise DomainError("N must be >= 1")
    n = np.arange(N, dtype=float)
    partial = complex(np.sum(np.where(n % 2 == 0, 1.0, -1.0) * np.exp(-s * np.log(2 * n + 1))))
    boundary = 0.5 * (-1) ** N * cmath.exp(-s * math.log(2 * N + 1))
    m = terms_needed(s, opts.tol)
    k = np.arange(N, N + m + 1, dtype=float)
    p = np.exp(-s * np.log(2 * k + 1))
    pieces = p[:-1] - p[1:]  # (2k+1)^-s - (2k+3)^-s = 2s * int_k^{k+1} (2x+1)^(-s-1) dx
    integral = 0.5 * (-1) ** N * alternating_sum(pieces)
    bounds = {"integral": abs(s) / sigma * (2 * N + 1) ** (-sigma)}
    if sigma < 1:
        bounds["total"] = ((2 * N + 1) ** (1 - sigma) / (1 - sigma)
                           + (1.5 + t / sigma) * (2 * N + 1) ** (-sigma))
    return SeriesTail(partial, boundary, integral, N, bounds)


def _bernoulli_piece_sum(s: complex, N: int) -> complex:
    """int_N^inf B1({x}) x^(-s-1) dx: exact pieces up to K, Euler-Maclaurin remainder beyond."""
    K = N + 400 + int(8 * abs(s))
    k = np.arange(N, K, dtype=float)
    a = np.exp((1.0 - s) * np.log(k))
    b = np.exp((1.0 - s) * np.log(k + 1.0))
    c = np.exp(-s * np.log(k))
    d = np.exp(-s * np.log(k + 1.0))
    pieces = (b - a) / (1.0 - s) - (k + 0.5) * (c - d) / s
    g0 = K ** (-s - 1.0)
    g2 = (s + 1) * (s + 2) * K ** (-s - 3.0)
    g4 = (s + 1) * (s + 2) * (s + 3) * (s + 4) * K ** (-s - 5.0)
    tail = -g0 / 12.0 + g2 / 720.0 - g4 / 30240.0
    return complex(np.sum(pieces[::-1])) + tail


def zeta_tail_euler_maclaurin(s, N: int) -> SeriesTail:
    """Split zeta(s) at N by first-order Euler-Maclaurin summation.

    zeta(s) = sum_{n<N} n^-s + N^-s / 2 + [N^(1-s)/(s-1) - s int_N^inf B1({x}) x^(-s-1) dx].

    ``bounds['total']`` (sigma < 1, t > 0) is
    N^(1-sigma)/(1-sigma) + N^(1-sigma)/t + (1/2 + t/(2 sigma)) N^-sigma.
    """
    s = complex(s)
    sigma, t = s.real, abs(s.imag)
    if sigma <= 0:
        raise DomainError("Euler-Maclaurin tail needs Re(s) > 0")
    if s == 1:
        raise DomainError("s = 1 is the pole of zeta")
    if N < 1:
        raise DomainError("N must be >= 1")
    n = np.arange(1, N, dtype=float)
    partial = complex(np.sum(np.exp(-s * np.log(n)))) if N > 1 else 0j
    boundary = 0.5 * cmath.exp(-s * math.log(N))
    integral = cmath.exp((1.0 - s) * math.log(N)) / (s - 1.0) - s * _bernoulli_piece_sum(s, N)
    bounds = {"bernoulli": abs(s) / (2 * sigma) * N ** (-sigma)}
    if sigma < 1 and t > 0:
        bounds["total"] = (N ** (1 - sigma) / (1 - sigma) + N ** (1 - sigma) / t
                           + (0.5 + t / (2 * sigma)) * N ** (-sigma))
    return SeriesTail(partial, boundary, integral, N, bounds)


@dataclass
class GrowthReport:
    sigma_min: float
    t_max: float
    sigmas: list
    max_ratio_zeta: float
    max_ratio_L: float
    slope_zeta: float
    slope_L: float
    envelope_slope_zeta: float
    envelope_slope_L: float
    bins: list

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def _binned_envelope(ts: np.ndarray, ratios: np.ndarray, lo: float, hi: float, nbins: int = 10):
    edges = np.geomspace(lo, hi, nbins + 1)
    centers, peaks = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        sel = (ts >= a) & (ts <= b)
        if sel.any():
            centers.append(math.sqrt(a * b))
            peaks.append(float(ratios[sel].max()))
    slope = float(np.polyfit(np.log(centers), np.log(peaks), 1)[0])
    return slope, list(zip(centers, peaks))


def _loglog_slope(ts: np.ndarray, ratios: np.ndarray, lo: float, hi: float) -> float:
    sel = (ts >= lo) & (ts <= hi) & (ratios > 0)
    return float(np.polyfit(np.log(ts[sel]), np.log(ratios[sel]), 1)[0])


def growth_bound_check(sigma_min: float, t_max: float, t_step: float = 0.25, sigma_step: float = 0.1,
                       opts: EvalOptions = DEFAULT_OPTIONS) -> GrowthReport:
    """Sample |zeta|, |L| on sigma in [sigma_min, 1], t in [2, t_max].

    Ratios are |f(sigma+it)| / t^(1-sigma_min); ``max_ratio_*`` is their
    maximum over the whole grid.  On the line sigma = sigma_min and the top
    decade [t_max/10, t_max]:

    slope_*           least-squares slope of log(ratio) against log t
    envelope_slope_*  the same for the per-bin maxima on 10 log-spaced bins
                      (tracks the peaks rather than the typical size; noisier)
    """
    if not 0 < sigma_min < 1:
        raise DomainError("sigma_min must lie in (0, 1)")
    if t_max <= 2:
        raise DomainError("t_max must exceed 2")
    sigmas = [float(x) for x in np.round(np.arange(sigma_min, 1.0 + 1e-9, sigma_step), 12)]
    if sigmas[-1] < 1.0:
        sigmas.append(1.0)
    ts = np.arange(2.0, t_max + 1e-9, t_step)
    denom = ts ** (1.0 - sigma_min)
    mz = ml = 0.0
    line_z = line_L = None
    for sg in sigmas:
        rz = np.array([abs(zeta(complex(sg, t), opts)) for t in ts]) / denom
        rl = np.array([abs(dirichlet_L(complex(sg, t), opts)) for t in ts]) / denom
        mz, ml = max(mz, float(rz.max())), max(ml, float(rl.max()))
        if line_z is None:
            line_z, line_L = rz, rl
    lo = t_max / 10.0
    env_z, bins_z = _binned_envelope(ts, line_z, lo, t_max)
    env_l, bins_l = _binned_envelope(ts, line_L, lo, t_max)
    return GrowthReport(sigma_min, t_max, sigmas, mz, ml,
                        _loglog_slope(ts, line_z, lo, t_max), _loglog_slope(ts, line_L, lo, t_max), env_z, env_l,
                        [{"t": c, "zeta": z, "L": l} for (c, z), (_, l) in zip(bins_z, bins_l)])


TAIL_SIGMAS = (0.1, 0.25, 0.5, 0.75, 0.9)
TAIL_TS = (1.5, 2.0, 5.0, 10.0, 30.0, 50.0, 100.0)


def tail_grid_N(t: float) -> list[int]:
    return sorted({1, 2, 5, 10, max(1, int((t - 1) / 2)), max(1, round(t)), 50})


@dataclass
class TailCheck:
    kind: str
    s: complex
    N: int
    quantity: str
    observed: float
    bound: float
    reconstruction_error: float

    @property
    def ok(self) -> bool:
        return self.observed <= self.bound


def tail_bound_sweep(sigmas=TAIL_SIGMAS, ts=TAIL_TS, opts: EvalOptions = DEFAULT_OPTIONS) -> list[TailCheck]:
    """Compare both tail splittings against their explicit magnitude bounds over a (sigma, t, N) grid."""
    out = []
    for sg in sigmas:
        for t in ts:
            s = complex(sg, t)
            L_ref, z_ref = dirichlet_L(s, opts), zeta(s, opts)
            for N in tail_grid_N(t):
                lt = L_tail_euler_boole(s, N, opts)
                err = abs(lt.value - L_ref)
                out.append(TailCheck("L", s, N, "integral", abs(lt.integral_term), lt.bounds["integral"], err))
                out.append(TailCheck("L", s, N, "total", abs(lt.value), lt.bounds["total"], err))
                zt = zeta_tail_euler_maclaurin(s, N)
                err = abs(zt.value - z_ref)
                bern = cmath.exp((1.0 - s) * math.log(N)) / (s - 1.0) - zt.integral_term
                out.append(TailCheck("zeta", s, N, "bernoulli", abs(bern), zt.bounds["bernoulli"], err))
                out.append(TailCheck("zeta", s, N, "total", abs(zt.value), zt.bounds["total"], err))
    return out
