"""Evaluation controls and the exception hierarchy shared by every module."""

from __future__ import annotations

import os
from dataclasses import dataclass

# binary64 cannot do better than this reliably once phases reach ~1e3 radians
TOL_FLOOR = 1e-13


class ZetaSymmetryError(ArithmeticError):
    """Base class for every contract violation raised by the package."""


class PoleError(ZetaSymmetryError):
    pass


class DomainError(ZetaSymmetryError, ValueError):
    pass


class ConvergenceError(ZetaSymmetryError):
    pass


class QuadratureError(ConvergenceError):
    pass


class IndeterminateError(ZetaSymmetryError):
    pass


class PropertyViolation(ZetaSymmetryError):
    def __init__(self, prop: str, witness, residual: float):
        super().__init__(f"property {prop} violated at s={witness!r}: residual {residual:.3e}")
        self.prop = prop
        self.witness = witness
        self.residual = residual


class ContourOnZeroError(ZetaSymmetryError):
    pass


class PhaseAmbiguityError(ZetaSymmetryError):
    pass


class ScanIncompleteError(ZetaSymmetryError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class EvalOptions:
    target_abs_tol: float = 1e-13
    target_rel_tol: float = 1e-13
    max_terms: int = 2000
    quadrature_abs_tol: float = 1e-11
    quadrature_max_depth: int = 40

    def __post_init__(self):
        if self.target_abs_tol < 0 or self.target_rel_tol < 0 or self.quadrature_abs_tol < 0:
            raise ValueError("tolerances must be non-negative")
        if self.target_abs_tol == 0 and self.target_rel_tol == 0:
            raise ValueError("at least one of target_abs_tol, target_rel_tol must be positive")
        if self.max_terms < 1 or self.quadrature_max_depth < 1:
            raise ValueError("max_terms and quadrature_max_depth must be positive")

    @property
    def tol(self) -> float:
        """Effective tolerance handed to the series kernels, never below the floor."""
        positive = [x for x in (self.target_abs_tol, self.target_rel_tol) if x > 0]
        return max(min(positive), TOL_FLOOR)


DEFAULT_OPTIONS = EvalOptions()


def worker_count() -> int:
    """Worker cap from ``ZETA_SYMMETRY_THREADS`` (0 or unset means one per CPU)."""
    raw = os.environ.get("ZETA_SYMMETRY_THREADS", "0").strip() or "0"
    n = int(raw)
    if n < 0:
        raise ValueError("ZETA_SYMMETRY_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


def parallel_map(fn, items):
    """Order-preserving map that fans out over threads when more than one worker is allowed."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
