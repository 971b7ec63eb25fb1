from __future__ import annotations

import json
import math

import pytest

from dunkl_series import cli
from dunkl_series.bessel import zeros_s
from dunkl_series.verify import Check, SuiteResult


def run(capsys, *argv):
    status = cli.main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def run_json(capsys, *argv):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    doc = json.loads(out)
    assert doc["schema"] == "1"
    return doc


# -- poly -----------------------------------------------------------------------


def test_poly_bernoulli_is_exact(capsys):
    doc = run_json(capsys, "poly", "bernoulli", "--alpha", "0", "--max-n", "5")
    assert doc["arithmetic"] == "rational"
    polys = doc["result"]["polys"]
    assert len(polys) == 6
    assert polys[2]["coeffs"] == ["-1/2", "0/1", "1/1"]
    assert polys[3]["coeffs"] == ["0/1", "-1/1", "0/1", "1/1"]


def test_poly_bernoulli_classical_check(capsys):
    doc = run_json(capsys, "poly", "bernoulli", "--alpha", "-1/2", "--max-n", "3", "--classical-check")
    check = doc["result"]["classical_check"]
    assert all(check["passed"]) and check["degrees"] == [0, 1, 2, 3]


def test_poly_bernoulli_decimal_alpha_uses_floats(capsys):
    doc = run_json(capsys, "poly", "bernoulli", "--alpha", "0.5", "--max-n", "2")
    assert doc["arithmetic"] == "float"
    c0 = doc["result"]["polys"][2]["coeffs"][0]
    assert c0 == pytest.approx(-1.5 / 2.5, rel=1e-15)


def test_poly_aed_at_first_zero(capsys):
    doc = run_json(capsys, "poly", "aed", "--alpha", "0", "--u-at-jzero", "1", "--max-n", "3")
    j1 = doc["result"]["u"][1]
    assert j1 == pytest.approx(2.404825557695773, rel=1e-14)
    e1, e2 = doc["result"]["polys"][1]["coeffs"], doc["result"]["polys"][2]["coeffs"]
    # at alpha = 0: E_1 = x + 2/(i j_1), E_2 = x^2 + 2x/(i j_1) - 2
    assert e1[0] == pytest.approx([0.0, -2 / j1], abs=1e-14)
    assert e2[0] == pytest.approx([-2.0, 0.0], abs=1e-13)
    assert e2[1] == pytest.approx([0.0, -2 / j1], abs=1e-14)


def test_poly_aed_with_explicit_u(capsys):
    doc = run_json(capsys, "poly", "aed", "--alpha", "1", "--u", "0.5j", "--max-n", "2")
    assert doc["result"]["u"] == [0.0, 0.5]


def test_poly_aed_needs_u(capsys):
    status, _, err = run(capsys, "poly", "aed", "--alpha", "0", "--max-n", "2")
    assert status == 2 and "usage error" in err


# -- zeros ----------------------------------------------------------------------


def test_zeros_lebesgue_case(capsys):
    doc = run_json(capsys, "zeros", "--alpha", "-1/2", "--count", "3")
    zs = doc["result"]["zeros"]
    assert zs == pytest.approx([math.pi, 2 * math.pi, 3 * math.pi], rel=1e-15)
    assert len(doc["result"]["residuals"]) == 3


def test_zeros_of_j0(capsys):
    doc = run_json(capsys, "zeros", "--alpha", "0", "--count", "1", "--kind", "j")
    assert doc["result"]["zeros"][0] == pytest.approx(2.404825557695773, rel=1e-15)


def test_zeros_rejects_alpha(capsys):
    status, out, err = run(capsys, "zeros", "--alpha", "-3", "--count", "1")
    assert status == 3 and out == "" and "precondition" in err


def test_zeros_tsv(capsys):
    status, out, _ = run(capsys, "zeros", "--alpha", "-1/2", "--count", "2", "--format", "tsv")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "# schema=1"
    assert "# alpha=-1/2" in lines and "# arithmetic=rational" in lines
    header = lines.index("j\tzero\tresidual")
    assert float(lines[header + 1].split("\t")[1]) == pytest.approx(math.pi, rel=1e-15)
    assert len(lines) == header + 3


# -- series ---------------------------------------------------------------------


def test_series_sigma(capsys):
    doc = run_json(capsys, "series", "sigma", "--k", "1", "--alpha", "0", "--terms", "10000", "--tail")
    res = doc["result"]
    assert res["closed"] == 0.125
    assert res["rel_err"] < 1e-6


def test_series_rho(capsys):
    doc = run_json(capsys, "series", "rho", "--k", "1", "--alpha", "0", "--terms", "2000")
    assert doc["result"]["closed"] == -0.125
    assert doc["result"]["rel_err"] < 1e-6


def test_series_eta_l(capsys):
    doc = run_json(capsys, "series", "eta-l", "--k", "0", "--alpha", "0", "--l", "1", "--terms", "2000")
    s1 = zeros_s(0.0, 1)[1]
    assert doc["result"]["closed"] == pytest.approx(1.5 / s1, rel=1e-13)
    assert doc["result"]["rel_err"] < 1e-6


def test_series_without_tail(capsys):
    doc = run_json(capsys, "series", "sigma", "--k", "1", "--alpha", "0", "--terms", "50", "--no-tail")
    assert doc["config"]["tail"] is False


@pytest.mark.parametrize("argv", [
    ("series", "eta-u", "--k", "0", "--alpha", "0"),
    ("series", "omega-l", "--k", "0", "--alpha", "0"),
])
def test_series_missing_parameter(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_series_outside_gate(capsys):
    status, _, err = run(capsys, "series", "rho", "--k", "1", "--alpha", "3", "--terms", "10")
    assert status == 3 and "precondition" in err


# -- fourier --------------------------------------------------------------------


def test_fourier_coeffs(capsys):
    doc = run_json(capsys, "fourier", "coeffs", "--alpha", "0", "--n", "2", "--max-j", "3", "--order", "64")
    entries = doc["result"]["coefficients"]
    assert [e["j"] for e in entries] == list(range(-3, 4))
    assert max(e["abs_err"] for e in entries) < 1e-10


def test_fourier_parseval_and_bcv(capsys):
    doc = run_json(capsys, "fourier", "parseval", "--alpha", "1/2", "--n", "2", "--terms", "2000")
    assert doc["result"]["rel_err"] < 1e-6
    doc = run_json(capsys, "fourier", "bcv", "--alpha", "0", "--x", "1.5", "--y", "-0.25")
    assert doc["result"]["rel_err"] < 1e-10


# -- verify ---------------------------------------------------------------------


def test_verify_exact_passes(capsys):
    doc = run_json(capsys, "verify", "exact")
    assert doc["result"]["passed"] is True
    assert "arithmetic" not in doc


def test_verify_all_writes_report(capsys, tmp_path):
    path = tmp_path / "out.json"
    doc = run_json(capsys, "verify", "all", "--report", str(path))
    on_disk = json.loads(path.read_text())
    assert on_disk == doc
    checks = on_disk["result"]["checks"]
    assert {c["criterion"] for c in checks} == set(range(1, 12))
    assert all("rel_err" in c for c in checks)


def test_verify_series_grid(capsys):
    doc = run_json(capsys, "verify", "series", "--alpha-grid", "-1/2,0,1/2,2")
    assert doc["config"]["alpha_grid"] == "-1/2,0,1/2,2"
    assert doc["result"]["passed"] is True


def test_verify_failure_exit_status(capsys, monkeypatch):
    checks = (Check(1, "fine", True, 0.0, 1e-10), Check(3, "broken sum", False, 0.5, 1e-6),
              Check(4, "also broken", False, 0.5, 1e-6))
    monkeypatch.setattr(cli, "run_suite", lambda suite, grid, seed=0: SuiteResult(suite, checks))
    status, out, err = run(capsys, "verify", "series")
    assert status == 4
    assert json.loads(out)["result"]["first_failure"] == "broken sum"
    assert "broken sum" in err


# -- plumbing ---------------------------------------------------------------------


@pytest.mark.parametrize("argv", [
    (),
    ("poly",),
    ("poly", "legendre", "--alpha", "0", "--max-n", "2"),
    ("zeros", "--alpha", "0", "--count", "x"),
    ("zeros", "--alpha", "1/0", "--count", "1"),
    ("zeros", "--alpha", "2j", "--count", "1"),
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ("poly", "bernoulli", "--alpha", "1/3", "--max-n", "8"),
    ("series", "sigma", "--k", "2", "--alpha", "0.25", "--terms", "500"),
    ("fourier", "bcv", "--alpha", "1", "--x", "0.3", "--y", "2"),
])
def test_byte_identical_output(capsys, argv):
    first, second = run(capsys, *argv)[1], run(capsys, *argv)[1]
    assert first == second
    assert json.loads(first)["config"]["alpha"] == argv[argv.index("--alpha") + 1]


def test_output_file(capsys, tmp_path):
    path = tmp_path / "table.tsv"
    status, out, _ = run(capsys, "series", "rho", "--k", "1", "--alpha", "0", "--terms", "100",
                         "--format", "tsv", "--output", str(path))
    assert status == 0 and out == ""
    lines = path.read_text().splitlines()
    row = lines[-1].split("\t")
    header = lines[-2].split("\t")
    assert header[:2] == ["kind", "k"]
    assert float(row[header.index("closed")]) == -0.125
