"""``zeta-symmetry`` command line: eval, scan, count, verify, table.

Exit codes: 0 ok, 2 usage/precondition error, 3 evaluation error,
4 incomplete scan (count decomposition violated), 5 identity suite failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
import time
import warnings
from dataclasses import asdict, dataclass
from typing import Optional

from . import dirichlet, eh, theta, zeros
from .gamma import gamma, log_gamma
from .options import TOL_FLOOR, EvalOptions, IndeterminateError, ScanIncompleteError, ZetaSymmetryError
from .suites import run_all

FUNCTIONS = ("eh", "A", "xi", "zeta", "L", "eta", "gamma", "loggamma", "h", "theta3sq", "eh_integral")
SCAN_TAGS = {"eh": "EH", "zeta": "ZETA", "xi": "ZETA", "l": "L"}
TABLE_TAGS = ("EH", "ZETA", "L", "H")

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(rf"^\s*(?P<re>[+-]?\s*{_NUM})?\s*(?:(?P<sign>[+-])\s*(?P<im>{_NUM})?\s*[ij])?\s*$")
_IMAG_ONLY_RE = re.compile(rf"^\s*(?P<sign>[+-]?)\s*(?P<im>{_NUM})?\s*[ij]\s*$")


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` / ``a-bi`` / ``a`` / ``bi`` with optional spaces; decimal digits only."""
    m = _IMAG_ONLY_RE.match(text)
    if m:
        im = float(m.group("im") or 1.0)
        return complex(0.0, -im if m.group("sign") == "-" else im)
    m = _COMPLEX_RE.match(text)
    if not m or m.group("re") is None:
        raise ValueError(f"cannot parse complex literal {text!r}")
    re_part = float(m.group("re").replace(" ", ""))
    im = 0.0
    if m.group("sign"):
        im = float(m.group("im") or 1.0)
        if m.group("sign") == "-":
            im = -im
    return complex(re_part, im)


def fmt(x: float) -> str:
    return format(float(x), ".12g")


def _round12(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, complex):
        return [_round12(x.real), _round12(x.imag)]
    if isinstance(x, float):
        return float(fmt(x)) if math.isfinite(x) else str(x)
    if isinstance(x, dict):
        return {k: _round12(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round12(v) for v in x]
    if hasattr(x, "item"):
        return _round12(x.item())
    return str(x)


@dataclass
class RunConfig:
    command: str
    function_tag: Optional[str] = None
    s: Optional[str] = None
    t_max: Optional[float] = None
    step: float = zeros.DEFAULT_STEP
    T: Optional[float] = None
    tol: float = 1e-8
    seed: int = 0
    samples: int = 500
    output_format: str = "csv"
    output_path: Optional[str] = None
    perturb: float = 0.0
    bin_width: float = 0.25
    timing: bool = True


class UsageError(Exception):
    pass


def _validate(cfg: RunConfig) -> None:
    if cfg.tol < TOL_FLOOR:
        raise UsageError(f"--tol must be >= {TOL_FLOOR:g}")
    if cfg.command == "eval":
        if cfg.s is None:
            raise UsageError("eval needs --s")
        if cfg.function_tag not in FUNCTIONS:
            raise UsageError(f"--fn must be one of {', '.join(FUNCTIONS)}")
        try:
            parse_complex(cfg.s)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if cfg.command == "scan":
        if cfg.t_max is None or cfg.t_max <= 0:
            raise UsageError("scan needs --t-max > 0")
        if not 0 < cfg.step <= 0.1:
            raise UsageError("--step must lie in (0, 0.1]")
        if (cfg.function_tag or "").lower() not in SCAN_TAGS:
            raise UsageError("scan --fn must be eh, zeta or L")
    if cfg.command in ("count", "table"):
        if cfg.T is None:
            raise UsageError(f"{cfg.command} needs --T")
        if cfg.command == "count" and cfg.T < 5:
            raise UsageError("count needs --T >= 5")
        if cfg.T <= 0:
            raise UsageError("--T must be positive")
    if cfg.command == "table" and cfg.function_tag and cfg.function_tag.upper() not in TABLE_TAGS + ("ZETA",):
        raise UsageError("table --fn must be eh, zeta, L or h")
    if cfg.samples < 100 and cfg.command == "verify":
        raise UsageError("--samples must be >= 100")


def _options(cfg: RunConfig) -> EvalOptions:
    # kernels run at the floor; --tol is the pass/fail threshold
    return EvalOptions()


def evaluate(fn: str, arg: str, opts: EvalOptions) -> dict:
    s = parse_complex(arg)
    route, est = "direct", None
    if fn == "eh":
        v = eh.eh_function(s, opts)
        value, route, est = v.value, v.route, v.est_error
    elif fn == "eh_integral":
        value, route = theta.eh_via_integral(s, opts), "integral_formula"
        est = opts.quadrature_abs_tol
    elif fn == "theta3sq":
        if s.imag != 0:
            raise ValueError("theta3sq takes a real x > 0")
        value = complex(theta.theta3_sq_minus_1(s.real))
    else:
        table = {"A": eh.A_function, "xi": eh.xi_function, "zeta": dirichlet.zeta, "L": dirichlet.dirichlet_L,
                 "eta": dirichlet.eta, "gamma": gamma, "loggamma": log_gamma}
        value = complex(eh.h_factor(s)) if fn == "h" else complex(table[fn](s, opts))
    if est is None:
        est = abs(value) * opts.tol
    return {"fn": fn, "s": s, "re": value.real, "im": value.imag, "route": route, "est_error": est}


def _zero_lists(T: float, tags, step: float, opts: EvalOptions) -> dict:
    out = {}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", zeros.StepTooCoarse)
        for tag in tags:
            if tag == "H":
                out[tag] = [r.t for r in zeros.h_zeros_in_strip(T) if r.sigma == 0.0]
            else:
                out[tag] = [r.t for r in zeros.scan_critical_line(tag, T, step, opts)]
    return out


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt(v) if isinstance(v, float) else v for v in r])
    return buf.getvalue()


def _json(cfg: RunConfig, results, residuals, elapsed_ms) -> str:
    doc = {"config": _round12(asdict(cfg)), "results": _round12(results), "residuals": _round12(residuals),
           "timing_ms": _round12(elapsed_ms) if cfg.timing else None}
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        _validate(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    opts = _options(cfg)
    t0 = time.perf_counter()
    code = 0
    results, residuals, text = [], {}, ""
    try:
        if cfg.command == "eval":
            rec = evaluate(cfg.function_tag, cfg.s, opts)
            results = [rec]
            header = ["fn", "s_re", "s_im", "re", "im", "route", "est_error"]
            rows = [[rec["fn"], rec["s"].real, rec["s"].imag, rec["re"], rec["im"], rec["route"], rec["est_error"]]]
        elif cfg.command == "scan":
            tag = SCAN_TAGS[cfg.function_tag.lower()]
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always", zeros.StepTooCoarse)
                recs = zeros.scan_critical_line(tag, cfg.t_max, cfg.step, opts)
            for w in caught:
                print(f"warning: {w.message}", file=stderr)
            results = [r.as_row() for r in recs]
            header = ["tag", "t", "sigma", "t_lo", "t_hi", "residual"]
            rows = [[r.function_tag.value, r.t, r.sigma, r.bracket[0], r.bracket[1], r.residual] for r in recs]
        elif cfg.command == "count":
            try:
                rep = zeros.count_report(cfg.T, opts, cfg.step)
            except ScanIncompleteError as exc:
                print(f"error: ScanIncompleteError: {exc}", file=stderr)
                rep, code = exc.report, 4
            d = rep.as_dict()
            results = [d]
            residuals = {"decomposition_ok": d["decomposition_ok"], "N_A_minus_scans": d["N_A"] - d["N_zeta"] - d["N_L"]}
            header = list(d.keys())
            rows = [[d[k] for k in header]]
        elif cfg.command == "verify":
            checks = run_all(cfg.samples, cfg.seed, opts, perturb=cfg.perturb)
            failed = [c.name for c in checks if not c.passed(cfg.tol)]
            results = [{"identity": c.name, "max_residual": c.max_residual, "witness": c.witness, "kind": c.kind,
                        "passed": c.passed(cfg.tol)} for c in checks]
            residuals = {c.name: c.max_residual for c in checks}
            header = ["identity", "max_residual", "witness_re", "witness_im", "kind", "passed"]
            rows = [[c.name, c.max_residual, c.witness.real, c.witness.imag, c.kind, str(c.passed(cfg.tol)).lower()]
                    for c in checks]
            if failed:
                print("error: identities failed: " + ", ".join(failed), file=stderr)
                code = 5
        elif cfg.command == "table":
            tags = TABLE_TAGS if not cfg.function_tag else (zeros.FunctionTag.parse(cfg.function_tag).value,)
            lists = _zero_lists(cfg.T, tags, cfg.step, opts)
            header = ["tag", "gap_bin_lo", "gap_bin_hi", "count"]
            rows = []
            for tag in tags:
                for lo, hi, n in zeros.gap_histogram(lists[tag], cfg.bin_width):
                    rows.append([tag, lo, hi, n])
            results = [dict(zip(header, r)) for r in rows]
            residuals = {tag: {"zeros": len(v), "gaps": max(len(v) - 1, 0)} for tag, v in lists.items()}
        else:
            print(f"error: unknown command {cfg.command}", file=stderr)
            return 2
    except IndeterminateError as exc:
        print(f"error: IndeterminateError: {exc}", file=stderr)
        print("# partial output", file=stdout)
        return 3
    except (ZetaSymmetryError, OverflowError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 3
    elapsed = (time.perf_counter() - t0) * 1e3
    text = _json(cfg, results, residuals, elapsed) if cfg.output_format == "json" else _csv(header, rows)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zeta-symmetry", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=["eval", "scan", "count", "verify", "table"])
    p.add_argument("--fn", dest="function_tag")
    p.add_argument("--s")
    p.add_argument("--t-max", dest="t_max", type=float)
    p.add_argument("--step", type=float, default=zeros.DEFAULT_STEP)
    p.add_argument("--T", dest="T", type=float)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--format", dest="output_format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", dest="output_path")
    p.add_argument("--perturb", type=float, default=0.0, help="add this constant to h(s) (suite canary)")
    p.add_argument("--bin-width", dest="bin_width", type=float, default=0.25)
    p.add_argument("--no-timing", dest="timing", action="store_false", help="emit timing_ms as null")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(RunConfig(**vars(args)))


if __name__ == "__main__":
    sys.exit(main())
