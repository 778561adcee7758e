"""Zeros of E, zeta, L and h in the critical strip.

Critical-line zeros are found as sign changes of real-valued functions of t:

    EH    E(1/2 + it)                                   (real by the symmetry of E)
    ZETA  xi(1/2 + it)
    L     Lambda(1/2 + it),  Lambda(s) = (4/pi)^((s+1)/2) Gamma((s+1)/2) L(s)

On the critical line E = -|1 - 2^s|^2 xi Lambda / (2 (1/4 + t^2)), so the EH
zeros are the union of the other two sets.  Zeros of h are enumerated in
closed form; zeros of E in a rectangle are counted with the argument principle.
"""

from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import asdict, dataclass

import numpy as np

from .dirichlet import LOG2, LOGPI, completed_L
from .eh import eh_value, h_factor, xi_function
from .gamma import gamma
from .options import (DEFAULT_OPTIONS, ContourOnZeroError, DomainError, EvalOptions, PhaseAmbiguityError,
                      ScanIncompleteError, parallel_map)

H_SPACING = 2.0 * math.pi / LOG2
DEFAULT_STEP = 0.05
REFINE_WIDTH = 1e-10


class FunctionTag(str, enum.Enum):
    EH = "EH"
    ZETA = "ZETA"
    L = "L"
    H = "H"

    @classmethod
    def parse(cls, name) -> "FunctionTag":
        if isinstance(name, cls):
            return name
        key = str(name).strip().upper()
        aliases = {"ZETA": "ZETA", "XI": "ZETA", "L": "L", "EH": "EH", "H": "H"}
        if key not in aliases:
            raise DomainError(f"unknown function tag {name!r}")
        return cls(aliases[key])


class StepTooCoarse(UserWarning):
    pass


@dataclass(frozen=True)
class ZeroRecord:
    function_tag: FunctionTag
    t: float
    sigma: float
    bracket: tuple
    residual: float

    def as_row(self) -> dict:
        d = asdict(self)
        d["function_tag"] = self.function_tag.value
        return d


def _norm_scale(tag: FunctionTag, s: complex, opts: EvalOptions) -> float:
    """Size of the non-arithmetic factor, so that |f|/scale is |zeta L|, |zeta| or |L|."""
    if tag is FunctionTag.EH:
        w = s if s.real >= 0.5 else 1.0 - s
        return abs(h_factor(w) * gamma(w, opts) * cmath.exp(-w * LOGPI))
    if tag is FunctionTag.ZETA:
        return abs(gamma(s / 2.0 + 1.0, opts) * cmath.exp(-s * LOGPI / 2.0) * (s - 1.0))
    if tag is FunctionTag.L:
        a = (s + 1.0) / 2.0
        return abs(cmath.exp(a * math.log(4.0 / math.pi)) * gamma(a, opts))
    return 1.0


def _complex_value(tag: FunctionTag, s: complex, opts: EvalOptions) -> complex:
    if tag is FunctionTag.EH:
        return eh_value(s, opts)
    if tag is FunctionTag.ZETA:
        return xi_function(s, opts)
    if tag is FunctionTag.L:
        return completed_L(s, opts)
    return h_factor(s)


def real_on_critical_line(tag, t: float, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Real part of the tag's critical-line function at 1/2 + it (the imaginary
    part is rounding noise; see ``critical_line_imag_ratio``)."""
    tag = FunctionTag.parse(tag)
    if tag is FunctionTag.H:
        raise DomainError("h(1/2+it) = |1-2^s|^2 > 0 has no critical-line zeros")
    return _complex_value(tag, complex(0.5, t), opts).real


def critical_line_imag_ratio(tag, t: float, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """|Im f(1/2+it)| / scale: how far from real the computed value is."""
    tag = FunctionTag.parse(tag)
    s = complex(0.5, t)
    return abs(_complex_value(tag, s, opts).imag) / _norm_scale(tag, s, opts)


def l_line_via_quotient(t: float, opts: EvalOptions = DEFAULT_OPTIONS, guard: float = 1e-6) -> float:
    """Lambda(1/2+it) recovered as 2 s(s-1) E / (h xi); cross-check of ``completed_L``.

    IndeterminateError when xi vanishes within ``guard`` (a zeta zero sits on t).
    """
    from .options import IndeterminateError

    s = complex(0.5, t)
    xi = xi_function(s, opts)
    if abs(xi) / _norm_scale(FunctionTag.ZETA, s, opts) < guard:
        raise IndeterminateError(f"xi(1/2+{t}i) vanishes; quotient for Lambda undefined")
    return (2.0 * s * (s - 1.0) * eh_value(s, opts) / (h_factor(s) * xi)).real


def _bisect(tag, lo, hi, flo, opts):
    while hi - lo > REFINE_WIDTH:
        mid = 0.5 * (lo + hi)
        fm = real_on_critical_line(tag, mid, opts)
        if fm == 0.0:
            return mid, mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo, hi


# a sampled local minimum of |f|/scale with no sign change is resampled this
# many times finer, up to REFINE_LEVELS deep, to split close zero pairs
REFINE_FACTOR = 10
REFINE_LEVELS = 3


def _sign_changes(tag, ts, vals, opts, out):
    for a, b, fa, fb in zip(ts[:-1], ts[1:], vals[:-1], vals[1:]):
        if fa == 0.0:
            out.append((a, a))
        elif (fa < 0) != (fb < 0) and fb != 0.0:
            out.append(_bisect(tag, a, b, fa, opts))


def _resolve(tag, ts, opts, level, out):
    vals = [real_on_critical_line(tag, t, opts) for t in ts]
    _sign_changes(tag, ts, vals, opts, out)
    if level >= REFINE_LEVELS:
        return
    g = [abs(v) / _norm_scale(tag, complex(0.5, t), opts) for t, v in zip(ts, vals)]
    for k in range(1, len(ts) - 1):
        same_sign = (vals[k - 1] < 0) == (vals[k] < 0) == (vals[k + 1] < 0)
        if same_sign and g[k] < g[k - 1] and g[k] < g[k + 1]:
            fine = np.linspace(ts[k - 1], ts[k + 1], 2 * REFINE_FACTOR + 1).tolist()
            found = []
            _resolve(tag, fine, opts, level + 1, found)
            # keep only zeros strictly inside the window; the coarse pass owns its end points
            out.extend(b for b in found if ts[k - 1] < b[0] and b[1] < ts[k + 1])


def _scan_chunk(args):
    tag, ts, opts = args
    out = []
    _resolve(tag, ts, opts, 0, out)
    return out


def scan_critical_line(tag, t_max: float, step: float = DEFAULT_STEP,
                       opts: EvalOptions = DEFAULT_OPTIONS) -> list[ZeroRecord]:
    """Sign-change scan on t = 0, step, ..., t_max, each bracket bisected below 1e-10.

    Sampled local minima of the normalized modulus that show no sign change are
    resampled on finer grids, which splits zero pairs closer than ``step``.
    """
    tag = FunctionTag.parse(tag)
    if not t_max > 0:
        raise DomainError("t_max must be positive")
    if not 0 < step <= 0.1:
        raise DomainError("step must lie in (0, 0.1]")
    n = int(math.floor(t_max / step + 1e-9))
    ts = [k * step for k in range(n + 1)]
    if ts[-1] < t_max:
        ts.append(float(t_max))
    # chunks share their end points so no sign change is lost at the seams
    size = 400
    chunks = [(tag, ts[i:i + size + 1], opts) for i in range(0, len(ts) - 1, size)]
    brackets = sorted(set(b for part in parallel_map(_scan_chunk, chunks) for b in part))
    records = []
    for lo, hi in brackets:
        t = 0.5 * (lo + hi)
        s = complex(0.5, t)
        res = abs(_complex_value(tag, s, opts)) / _norm_scale(tag, s, opts)
        records.append(ZeroRecord(tag, t, 0.5, (lo, hi), res))
    for a, b in zip(records[:-1], records[1:]):
        if b.t - a.t < 2 * step:
            warnings.warn(f"{tag.value} zeros at t={a.t:.6f} and t={b.t:.6f} are closer than 2*step; "
                          "a pair may be missed", StepTooCoarse, stacklevel=2)
    return records


def h_zeros_in_strip(T: float) -> list[ZeroRecord]:
    """Imaginary zeros of h with 0 < t <= T: s = 2 pi i k/log 2 and 1 + 2 pi i k/log 2."""
    if not T > 0:
        raise DomainError("T must be positive")
    out = []
    for k in range(1, int(math.floor(T / H_SPACING)) + 1):
        t = k * H_SPACING
        for sigma in (0.0, 1.0):
            out.append(ZeroRecord(FunctionTag.H, t, sigma, (t, t), abs(h_factor(complex(sigma, t)))))
    return out


@dataclass(frozen=True)
class ContourSpec:
    T: float
    sigma_lo: float = -1.0
    sigma_hi: float = 2.0
    t_lo: float = 0.0
    max_phase_step: float = math.pi / 4
    min_modulus_guard: float = 1e-9
    initial_step: float = 0.05
    max_step: float = 0.25
    min_step: float = 1e-9

    def __post_init__(self):
        if not 0 < self.max_phase_step <= math.pi / 2:
            raise ValueError("max_phase_step must lie in (0, pi/2]")
        if self.min_modulus_guard <= 0:
            raise ValueError("min_modulus_guard must be positive")
        if not (self.sigma_lo < self.sigma_hi and self.t_lo < self.T):
            raise ValueError("empty rectangle")


class _NearZero(Exception):
    pass


@dataclass
class WindingResult:
    count: int
    raw_turns: float
    T_used: float
    evaluations: int


def _walk(f, scale, path, cs: ContourSpec, counter):
    """Accumulate the continuous argument of f along a polyline of complex vertices."""
    total = 0.0
    for a, b in zip(path[:-1], path[1:]):
        length = abs(b - a)
        direction = (b - a) / length
        pos = 0.0
        fa = f(a)
        counter[0] += 1
        step = cs.initial_step
        while pos < length:
            h = min(step, length - pos)
            z = a + direction * (pos + h)
            fz = f(z)
            counter[0] += 1
            if abs(fz) / scale(z) < cs.min_modulus_guard:
                raise _NearZero(z)
            d = cmath.phase(fz / fa)
            if abs(d) > cs.max_phase_step:
                if h <= cs.min_step:
                    if abs(d) >= math.pi / 2:
                        raise PhaseAmbiguityError(f"phase jump {d:.3f} at s={z} below step {h:.1e}")
                else:
                    step = h / 2.0
                    continue
            total += d
            pos += h
            fa = fz
            if abs(d) < cs.max_phase_step / 4:
                step = min(step * 1.5, cs.max_step)
    return total


def winding_number(f_tag, contour: ContourSpec, opts: EvalOptions = DEFAULT_OPTIONS, max_nudges: int = 10) -> WindingResult:
    """Counterclockwise walk of the rectangle starting at (sigma_hi, t_lo).

    For H the bottom edge t = 0 would run through the real zeros 0 and 1 of h,
    so when ``t_lo`` is 0 it is lifted to pi/log 2, halfway to the first
    imaginary zero; N_h counts imaginary zeros only.
    """
    tag = FunctionTag.parse(f_tag)
    if tag not in (FunctionTag.EH, FunctionTag.H):
        raise DomainError("argument-principle counting is provided for EH and H")
    t_lo = contour.t_lo
    if tag is FunctionTag.H and t_lo == 0.0:
        t_lo = 0.5 * H_SPACING

    def f(z):
        return _complex_value(tag, z, opts)

    def scale(z):
        return _norm_scale(tag, z, opts)

    T = contour.T
    for _ in range(max_nudges + 1):
        lo, hi = contour.sigma_lo, contour.sigma_hi
        path = [complex(hi, t_lo), complex(hi, T), complex(lo, T), complex(lo, t_lo), complex(hi, t_lo)]
        counter = [0]
        try:
            total = _walk(f, scale, path, contour, counter)
        except _NearZero:
            T = round(T + 0.01, 10)
            continue
        turns = total / (2.0 * math.pi)
        return WindingResult(int(round(turns)), turns, T, counter[0])
    raise ContourOnZeroError(f"contour stayed within the modulus guard after {max_nudges} nudges of T")


def argument_principle_count(f_tag, contour: ContourSpec, opts: EvalOptions = DEFAULT_OPTIONS) -> int:
    """Number of zeros inside the rectangle (winding number of f along its boundary)."""
    return winding_number(f_tag, contour, opts).count


def asymptotic_counts(T: float) -> dict:
    e = math.e
    return {
        "eh": T / math.pi * math.log(2 * T / (math.pi * e)),
        "h": T / math.pi * LOG2,
        "A": T / math.pi * math.log(T / (math.pi * e)),
        "zeta": T / (2 * math.pi) * math.log(T / (2 * math.pi * e)),
        "L": T / (2 * math.pi) * math.log(2 * T / (math.pi * e)),
    }


# slack multiplier on log T allowed between N_eh and its main term (artifact choice)
EH_LOG_SLACK = 2.0


@dataclass
class CountReport:
    T: float
    N_eh: int
    N_h: int
    N_A: int
    N_zeta: int
    N_L: int
    asymptotic_eh: float
    asymptotic_h: float
    asymptotic_A: float
    asymptotic_zeta: float
    asymptotic_L: float
    decomposition_ok: bool
    eh_within_log_slack: bool
    log_slack_constant: float = EH_LOG_SLACK
    twice_L_gap: int = 0
    raw_turns: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)


def count_report(T: float, opts: EvalOptions = DEFAULT_OPTIONS, step: float = DEFAULT_STEP) -> CountReport:
    """All five counts up to height T plus their main terms.

    N_eh from the argument principle, N_h in closed form, N_zeta and N_L from
    critical-line scans, N_A = N_eh - N_h.  If N_A != N_zeta + N_L the report
    is attached to a ScanIncompleteError: either a scan missed a zero or E has
    a zero off the critical line.
    """
    if T < 5:
        raise DomainError("count_report needs T >= 5")
    wr = winding_number(FunctionTag.EH, ContourSpec(T=T), opts)
    T_used = wr.T_used
    n_h = len(h_zeros_in_strip(T_used))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", StepTooCoarse)
        n_z = len(scan_critical_line(FunctionTag.ZETA, T_used, step, opts))
        n_l = len(scan_critical_line(FunctionTag.L, T_used, step, opts))
    asym = asymptotic_counts(T_used)
    n_a = wr.count - n_h
    report = CountReport(
        T=T_used, N_eh=wr.count, N_h=n_h, N_A=n_a, N_zeta=n_z, N_L=n_l,
        asymptotic_eh=asym["eh"], asymptotic_h=asym["h"], asymptotic_A=asym["A"],
        asymptotic_zeta=asym["zeta"], asymptotic_L=asym["L"],
        decomposition_ok=(n_a == n_z + n_l),
        eh_within_log_slack=abs(wr.count - asym["eh"]) <= EH_LOG_SLACK * math.log(T_used),
        twice_L_gap=wr.count - 2 * n_l, raw_turns=wr.raw_turns,
    )
    if not report.decomposition_ok:
        raise ScanIncompleteError(
            f"N_A = N_eh - N_h = {n_a} but N_zeta + N_L = {n_z} + {n_l} = {n_z + n_l} at T={T_used}", report)
    return report


def gap_histogram(ordinates, bin_width: float) -> list[tuple[float, float, int]]:
    """Histogram of consecutive gaps as (bin_lo, bin_hi, count) covering the occupied range."""
    t = np.sort(np.asarray(ordinates, dtype=float))
    gaps = np.diff(t)
    if gaps.size == 0:
        return []
    idx = np.floor(gaps / bin_width + 1e-9).astype(int)
    rows = []
    for i in range(idx.min(), idx.max() + 1):
        rows.append((i * bin_width, (i + 1) * bin_width, int(np.sum(idx == i))))
    return rows
