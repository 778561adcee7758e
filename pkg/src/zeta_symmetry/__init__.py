"""Numerics for the symmetric entire function E(s) = (1-2^s)(1-2^(1-s)) Gamma(s) zeta(s) L(s) / pi^s."""

from .dirichlet import (SeriesTail, completed_L, dirichlet_L, eta, growth_bound_check, L_tail_euler_boole, zeta,
                        zeta_tail_euler_maclaurin)
from .eh import A_function, EhValue, eh_function, eh_value, h_factor, property_suite, xi_function
from .gamma import gamma, log_gamma, stirling_log_gamma
from .options import (ContourOnZeroError, ConvergenceError, DomainError, EvalOptions, IndeterminateError,
                      PhaseAmbiguityError, PoleError, PropertyViolation, QuadratureError, ScanIncompleteError)
from .theta import (ThetaOptions, eh_via_integral, jacobi_transform_residual, lambert_sum,
                    ramanujan_identity_residual, theta3_sq_minus_1)
from .zeros import (ContourSpec, CountReport, FunctionTag, ZeroRecord, argument_principle_count, count_report,
                    h_zeros_in_strip, real_on_critical_line, scan_critical_line)

__version__ = "0.1.0"
