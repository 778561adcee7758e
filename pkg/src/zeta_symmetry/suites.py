"""Seeded residual suites for every identity the library relies on.

Each check returns an ``IdentityResult`` holding the worst residual over its
sample and the point where it occurred.  ``kind`` is "residual" for residuals
compared against a tolerance, or "indicator" for checks already scaled so that
values below 1 pass.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import dirichlet as D
from .eh import A_function, eh_value, property_suite, rel_residual, xi_function
from .gamma import gamma
from .options import DEFAULT_OPTIONS, EvalOptions
from .theta import (eh_via_integral, jacobi_transform_residual, lambert_sum, ramanujan_identity_residual,
                    sech_lambert_residual, theta3_sq_minus_1)

THETA_GRID = (0.05, 0.1, 0.5, 1.0, math.pi, 10.0, 50.0)


@dataclass
class IdentityResult:
    name: str
    max_residual: float
    witness: complex
    kind: str = "residual"

    def passed(self, tol: float) -> bool:
        return self.max_residual < (1.0 if self.kind == "indicator" else tol)


def _worst(name, pairs, kind="residual"):
    w, r = max(pairs, key=lambda p: p[1])
    return IdentityResult(name, float(r), complex(w), kind)


def _clear_of_integers(s: complex, r: float = 0.1) -> bool:
    return abs(s.imag) > r or abs(s.real - round(s.real)) > r


def functional_sample(n: int, seed: int) -> list[complex]:
    """n points with 0.1 < |sigma| < 10, |t| < 50, away from the integers on the real axis."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        sg = rng.uniform(0.1, 10.0) * rng.choice((-1.0, 1.0))
        s = complex(sg, rng.uniform(-50.0, 50.0))
        if _clear_of_integers(s) and abs(1 - cmath.exp((1 - s) * D.LOG2)) > 1e-3 and abs(1 - cmath.exp(s * D.LOG2)) > 1e-3:
            out.append(s)
    return out


def gamma_checks(n: int, seed: int, opts: EvalOptions = DEFAULT_OPTIONS) -> list[IdentityResult]:
    rng = np.random.default_rng(seed + 1)
    pts = []
    while len(pts) < n:
        s = complex(rng.uniform(-10, 10), rng.uniform(-30, 30))
        if _clear_of_integers(s, 1e-3) and _clear_of_integers(2 * s, 1e-3):
            pts.append(s)
    refl, dup, rec = [], [], []
    for s in pts:
        g = gamma(s, opts)
        refl.append((s, abs(g * gamma(1 - s, opts) * cmath.sin(math.pi * s) / math.pi - 1)))
        try:
            lhs = g * gamma(s + 0.5, opts)
            rhs = math.sqrt(math.pi) * cmath.exp((1 - 2 * s) * D.LOG2) * gamma(2 * s, opts)
            dup.append((s, rel_residual(lhs, rhs)))
        except OverflowError:
            pass
        rec.append((s, rel_residual(gamma(s + 1, opts), s * g)))
    return [_worst("gamma_reflection", refl), _worst("gamma_duplication", dup), _worst("gamma_recurrence", rec)]


def functional_equation_checks(n: int, seed: int, opts: EvalOptions = DEFAULT_OPTIONS) -> list[IdentityResult]:
    pts = functional_sample(n, seed)
    zr, er, lr, ps, asym, xs, es = [], [], [], [], [], [], []
    for s in pts:
        w = 1 - s
        zr.append((s, rel_residual(D.zeta(s, opts), cmath.exp(s * D.LOG2 + (s - 1) * D.LOGPI) * gamma(w, opts)
                                   * cmath.sin(math.pi * s / 2) * D.zeta(w, opts))))
        eta_s, eta_w = D.eta(s, opts), D.eta(w, opts)
        er.append((s, rel_residual(eta_w, -(cmath.exp(s * D.LOG2) - 1) / (cmath.exp(s * D.LOGPI) * (cmath.exp((s - 1) * D.LOG2) - 1))
                                   * gamma(s, opts) * cmath.cos(math.pi * s / 2) * eta_s)))
        L_s, L_w = D.dirichlet_L(s, opts), D.dirichlet_L(w, opts)
        lr.append((s, rel_residual(L_w, cmath.exp(s * (D.LOG2 - D.LOGPI)) * gamma(s, opts) * cmath.sin(math.pi * s / 2) * L_s)))
        lhs = (1 - cmath.exp(w * D.LOG2)) * cmath.exp(-w * D.LOGPI) * gamma(w, opts) * eta_w * L_w
        rhs = (1 - cmath.exp(s * D.LOG2)) * cmath.exp(-s * D.LOGPI) * gamma(s, opts) * eta_s * L_s
        ps.append((s, rel_residual(lhs, rhs)))
        asym.append((s, rel_residual(A_function(s, opts), A_function(w, opts))))
        xs.append((s, rel_residual(xi_function(s, opts), xi_function(w, opts))))
        es.append((s, rel_residual(eh_value(s, opts), eh_value(w, opts))))
    return [_worst("A_symmetry", asym), _worst("zeta_reflection", zr), _worst("xi_symmetry", xs),
            _worst("eta_reflection", er), _worst("L_reflection", lr), _worst("product_symmetry", ps),
            _worst("eh_symmetry", es)]


def conjugate_checks(n: int, seed: int, opts: EvalOptions = DEFAULT_OPTIONS) -> list[IdentityResult]:
    pts = functional_sample(n, seed + 2)
    out = []
    for name, fn in (("conj_zeta", D.zeta), ("conj_eta", D.eta), ("conj_L", D.dirichlet_L), ("conj_gamma", gamma)):
        out.append(_worst(name, [(s, abs(fn(s.conjugate(), opts) - fn(s, opts).conjugate())) for s in pts]))
    return out


def theta_checks() -> list[IdentityResult]:
    jac = [(x, jacobi_transform_residual(x)) for x in THETA_GRID]
    lam = [(x, abs(4 * lambert_sum(x) - theta3_sq_minus_1(x))) for x in THETA_GRID]
    ram = [(x, ramanujan_identity_residual(x)) for x in THETA_GRID]
    sech = [(x, sech_lambert_residual(x)) for x in THETA_GRID]
    return [_worst("jacobi_transform", jac), _worst("theta_square_lambert", lam), _worst("ramanujan_n0", ram),
            _worst("sech_lambert_rearrangement", sech)]


def route_sample(n: int, seed: int) -> list[complex]:
    rng = np.random.default_rng(seed + 3)
    return [complex(a, b) for a, b in zip(rng.uniform(-2, 3, n), rng.uniform(0, 20, n))]


def route_equivalence(n: int, seed: int, opts: EvalOptions = DEFAULT_OPTIONS) -> IdentityResult:
    pairs = [(s, abs(eh_via_integral(s, opts) - eh_value(s, opts))) for s in route_sample(n, seed)]
    return _worst("integral_route", pairs)


def property_checks(n: int, seed: int, opts: EvalOptions = DEFAULT_OPTIONS, perturb: float = 0.0) -> list[IdentityResult]:
    out = []
    for r in property_suite(max(n, 100), seed, opts, perturb=perturb):
        kind = "indicator" if r.name == "zero_free" else "residual"
        out.append(IdentityResult(f"property_{r.name}", r.max_residual, complex(r.witness), kind))
    return out


def run_all(samples: int = 500, seed: int = 0, opts: EvalOptions = DEFAULT_OPTIONS, perturb: float = 0.0,
            route_points: int = 100) -> list[IdentityResult]:
    return (gamma_checks(samples, seed, opts) + functional_equation_checks(samples, seed, opts)
            + conjugate_checks(min(samples, 200), seed, opts) + property_checks(samples, seed, opts, perturb)
            + theta_checks() + [route_equivalence(route_points, seed, opts)])
