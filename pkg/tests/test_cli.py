import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from zeta_symmetry.cli import RunConfig, build_parser, fmt, main, parse_complex, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    args = build_parser().parse_args(list(argv))
    code = run(RunConfig(**vars(args)), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("text,value", [("0.5+5i", 0.5 + 5j), ("0.5 - 7i", 0.5 - 7j), ("2", 2), ("-3i", -3j),
                                        ("1e-3+2.5e1i", 0.001 + 25j), (" -0.25 + i", -0.25 + 1j), ("4j", 4j)])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("bad", ["", "abc", "1+2", "1+2i+3", "0x1+2i"])
def test_parse_complex_rejects(bad):
    with pytest.raises(ValueError):
        parse_complex(bad)


@given(st.floats(-1e6, 1e6), st.floats(-1e6, 1e6))
def test_parse_complex_round_trip(a, b):
    text = f"{fmt(a)}{'-' if b < 0 else '+'}{fmt(abs(b))}i"
    v = parse_complex(text)
    assert fmt(v.real) == fmt(a) and fmt(v.imag) == fmt(b)


def test_eval_csv():
    code, out, _ = call("eval", "--fn", "eh", "--s", "0.5+5i")
    assert code == 0
    row = next(csv.DictReader(io.StringIO(out)))
    assert float(row["re"]) == pytest.approx(-2.519281933e-3, rel=1e-9)
    assert row["route"] == "product_formula"
    assert "\r" not in out


def test_eval_endpoint_json():
    code, out, _ = call("eval", "--fn", "eh", "--s", "0", "--format", "json", "--no-timing")
    doc = json.loads(out)
    assert code == 0 and doc["timing_ms"] is None
    assert set(doc) == {"config", "results", "residuals", "timing_ms"}
    assert doc["results"][0]["re"] == pytest.approx(-0.173286795139986, rel=1e-11)


@pytest.mark.parametrize("fn", ["A", "xi", "zeta", "L", "eta", "gamma", "loggamma", "h", "eh_integral"])
def test_eval_every_function(fn):
    assert call("eval", "--fn", fn, "--s", "0.5+5i")[0] == 0
    assert call("eval", "--fn", "theta3sq", "--s", "1.5")[0] == 0


def test_exit_codes():
    code, _, err = call("eval", "--fn", "zeta", "--s", "1")
    assert code == 3 and "PoleError" in err
    assert call("eval", "--fn", "eh", "--s", "nonsense")[0] == 2
    assert call("eval", "--fn", "nope", "--s", "1")[0] == 2
    assert call("eval", "--fn", "eh", "--s", "1", "--tol", "1e-20")[0] == 2
    assert call("count", "--T", "3")[0] == 2
    assert call("scan", "--fn", "eh", "--t-max", "5", "--step", "0.5")[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_scan():
    code, out, _ = call("scan", "--fn", "eh", "--t-max", "7")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1 and abs(float(rows[0]["t"]) - 6.0209489) < 1e-5
    code, out, _ = call("scan", "--fn", "zeta", "--t-max", "15")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1 and abs(float(rows[0]["t"]) - 14.13472514) < 1e-6
    code, out, _ = call("scan", "--fn", "eh", "--t-max", "0.5")
    assert code == 0 and out.strip().count("\n") == 0


def test_count_15():
    code, out, _ = call("count", "--T", "15", "--format", "json", "--no-timing")
    rep = json.loads(out)["results"][0]
    assert code == 0 and rep["N_h"] == 2 and rep["N_eh"] == rep["N_h"] + rep["N_zeta"] + rep["N_L"]


def test_verify_and_canary():
    assert call("verify", "--samples", "100")[0] == 0
    code, _, err = call("verify", "--samples", "100", "--perturb", "1e-6")
    assert code == 5 and "property_factorization" in err


def test_verify_deterministic():
    a = call("verify", "--seed", "42", "--samples", "120", "--format", "json", "--no-timing")[1]
    b = call("verify", "--seed", "42", "--samples", "120", "--format", "json", "--no-timing")[1]
    assert a == b


def test_table_h_and_round_trip(tmp_path):
    code, out, _ = call("table", "--T", "100", "--fn", "h")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["tag", "gap_bin_lo", "gap_bin_hi", "count"] and len(rows) == 2
    assert float(rows[1][1]) <= 9.0647202836543876 < float(rows[1][2])
    path = tmp_path / "t.csv"
    assert call("table", "--T", "100", "--out", str(path))[0] == 0
    text = path.read_text()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in csv.reader(io.StringIO(text)):
        w.writerow(r if r[0] == "tag" else [r[0], fmt(float(r[1])), fmt(float(r[2])), int(r[3])])
    assert buf.getvalue() == text


def test_table_eh_total():
    code, out, _ = call("table", "--T", "100", "--fn", "eh")
    counts = [int(r["count"]) for r in csv.DictReader(io.StringIO(out))]
    scan = call("scan", "--fn", "eh", "--t-max", "100")[1]
    n = len(list(csv.DictReader(io.StringIO(scan))))
    assert sum(counts) == n - 1


def test_console_script_module():
    r = subprocess.run([sys.executable, "-m", "zeta_symmetry.cli", "eval", "--fn", "eh", "--s", "0.5+7i"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "8.959203701" in r.stdout
