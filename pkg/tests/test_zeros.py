import math
import warnings

import mpmath
import pytest

from zeta_symmetry.options import DomainError, IndeterminateError
from zeta_symmetry.zeros import (H_SPACING, ContourSpec, FunctionTag, StepTooCoarse, argument_principle_count,
                                 asymptotic_counts, count_report, critical_line_imag_ratio, gap_histogram,
                                 h_zeros_in_strip, l_line_via_quotient, real_on_critical_line, scan_critical_line)


def test_tag_parse():
    assert FunctionTag.parse("eh") is FunctionTag.EH
    assert FunctionTag.parse("zeta") is FunctionTag.ZETA
    assert FunctionTag.parse("L") is FunctionTag.L
    with pytest.raises(ValueError):
        FunctionTag.parse("gamma")


@pytest.mark.parametrize("tag", ["EH", "ZETA", "L"])
def test_real_on_line(tag):
    for t in (1.0, 9.5, 40.0):
        assert critical_line_imag_ratio(tag, t) < 1e-10
    with pytest.raises(DomainError):
        real_on_critical_line("H", 3.0)


def test_zeta_zeros_match_mpmath():
    found = [r.t for r in scan_critical_line("ZETA", 50.0)]
    ref = [float(mpmath.zetazero(n).imag) for n in range(1, 11)]
    assert len(found) == 10
    assert max(abs(a - b) for a, b in zip(found, ref)) < 1e-8


def test_first_eh_zero_is_first_L_zero():
    eh = scan_critical_line("EH", 7.0)
    L = scan_critical_line("L", 7.0)
    assert len(eh) == len(L) == 1
    assert abs(eh[0].t - 6.0209489) < 1e-5
    assert abs(eh[0].t - L[0].t) < 1e-9
    assert eh[0].residual < 1e-8


def test_no_zero_below_first():
    assert scan_critical_line("EH", 0.5) == []


def test_eh_zeros_are_union_of_factor_zeros():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", StepTooCoarse)
        eh = [r.t for r in scan_critical_line("EH", 90.0)]
        union = sorted([r.t for r in scan_critical_line("ZETA", 90.0)] + [r.t for r in scan_critical_line("L", 90.0)])
    assert len(eh) == len(union)
    assert max(abs(a - b) for a, b in zip(eh, union)) < 1e-8


def test_close_pair_is_split():
    # an L zero and a zeta zero 0.0038 apart near t = 84.73
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", StepTooCoarse)
        eh = [r.t for r in scan_critical_line("EH", 85.0)]
    near = [t for t in eh if 84.7 < t < 84.8]
    assert len(near) == 2
    assert any(issubclass(w.category, StepTooCoarse) for w in caught)


def test_scan_preconditions():
    with pytest.raises(DomainError):
        scan_critical_line("EH", 10.0, step=0.5)


def test_h_zeros_closed_form():
    zs = h_zeros_in_strip(100.0)
    assert len(zs) == 22
    assert {z.sigma for z in zs} == {0.0, 1.0}
    ts = sorted({z.t for z in zs})
    assert ts[0] == pytest.approx(H_SPACING)
    assert len(h_zeros_in_strip(15.0)) == 2


def test_winding_counts():
    assert argument_principle_count("H", ContourSpec(T=10.0)) == 2
    assert argument_principle_count("EH", ContourSpec(T=7.0)) == 1
    with pytest.raises(DomainError):
        argument_principle_count("ZETA", ContourSpec(T=15.0))


def test_count_report_small():
    rep = count_report(15.0)
    assert (rep.N_eh, rep.N_h, rep.N_zeta, rep.N_L) == (6, 2, 1, 3)
    assert rep.decomposition_ok
    with pytest.raises(DomainError):
        count_report(3.0)


def test_asymptotics_consistent():
    a = asymptotic_counts(100.0)
    assert a["eh"] == pytest.approx(100 / math.pi * math.log(200 / (math.pi * math.e)))
    assert a["A"] == pytest.approx(a["zeta"] + a["L"])


def test_l_quotient_cross_check():
    for t in (3.0, 20.0):
        v = real_on_critical_line("L", t)
        q = l_line_via_quotient(t)
        assert abs(abs(v) - abs(q)) <= 1e-9 * max(abs(v), 1)
    with pytest.raises(IndeterminateError):
        l_line_via_quotient(14.134725141734695)


def test_gap_histogram():
    rows = gap_histogram([0.0, 1.0, 2.0, 3.5], 0.5)
    assert rows == [(1.0, 1.5, 2), (1.5, 2.0, 1)]
    assert gap_histogram([1.0], 0.25) == []
    h = sorted({z.t for z in h_zeros_in_strip(100.0)})
    rows = gap_histogram(h, 0.25)
    assert len(rows) == 1 and rows[0][0] <= H_SPACING < rows[0][1]
