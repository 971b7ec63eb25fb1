from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunkl_series.apostol_euler import (
    aed_at_izero,
    aed_family,
    aed_generating_sum,
    apostol_reduction_check,
    bernoulli_limit_check,
)
from dunkl_series.bessel import calI, calI_deriv, deriv_polys, zeros_j, zeros_s
from dunkl_series.classical import apostol_euler_poly, euler_poly
from dunkl_series.errors import InvalidParameter


def reference_izero_family(a, jl):
    """First four polynomials at ``u = i j_l`` as coefficient lists."""
    ij = 1j * jl
    b = 1 + 2 * a
    e1 = [2 * (1 + a) * b / ij, 1]
    e2 = [-2 * (1 + a) * (1 + 2 * a * b / jl**2), 2 * b / ij, 1]
    e3 = [
        -8 * (2 + a) * (1 + a) * b / (3 * ij) * (2 + a * (-1 + 2 * a) / jl**2),
        -2 * (2 + a) * (1 + 2 * a * b / jl**2),
        2 * (2 + a) * b / ij,
        1,
    ]
    return [[1], e1, e2, e3]


@pytest.mark.parametrize("a", [0.0, 0.5, 1.75, -0.25])
@pytest.mark.parametrize("l", [1, 2, 5])
def test_reference_values_at_zeros(a, l):
    table = zeros_j(a, 5)
    fam = aed_at_izero(a, table, l, 3)
    for n, expected in enumerate(reference_izero_family(a, table[l])):
        got = fam[n].coeffs
        assert len(got) == len(expected)
        for c, e in zip(got, expected):
            assert abs(c - e) < 1e-12 * max(1.0, abs(e))


def test_lebesgue_case_first_polynomial_is_monomial():
    fam = aed_at_izero(-0.5, zeros_j(-0.5, 1), 1, 1)
    assert abs(fam[1].coeff(0)) < 1e-15


@pytest.mark.parametrize("a", [0.0, 0.5, 2.0])
def test_zero_route_agrees_with_generic_route(a):
    table = zeros_j(a, 3)
    for l in (1, 2, 3):
        special = aed_at_izero(a, table, l, 8)
        generic = aed_family(a, 1j * table[l], 8)
        for n in range(9):
            assert (special[n] - generic[n]).max_abs() < 1e-10 * max(1.0, special[n].max_abs())


@pytest.mark.parametrize("a", [0.0, 0.5, 2.0])
def test_i_power_structure_at_zeros(a):
    fam = aed_at_izero(a, zeros_j(a, 2), 2, 10)
    for n in range(11):
        for m, c in enumerate(fam[n].coeffs):
            leak = abs(c.imag) if (n - m) % 2 == 0 else abs(c.real)
            assert leak < 1e-12 * max(1.0, abs(c))


@pytest.mark.parametrize("a", [0.0, 0.5, 3.0])
@pytest.mark.parametrize("u", [0.7, 1.3 - 0.4j, 2j])
def test_appell_property(a, u):
    fam = aed_family(a, u, 12)
    assert fam[0].coeffs == (1,)
    for n in range(1, 13):
        assert fam.appell_defect(n) < 1e-10


@pytest.mark.parametrize("a", [0.0, 1.5])
@pytest.mark.parametrize("u", [0.9, 1.2 + 0.5j])
@pytest.mark.parametrize("x", [0.4, -1.0])
def test_generating_function(a, u, x):
    fam = aed_family(a, u, 40)
    total, closed = aed_generating_sum(fam, x, 0.3)
    assert abs(total - closed) < 1e-9 * abs(closed)


def test_euler_reduction():
    fam = aed_family(Fraction(-1, 2), 1j * math.pi / 2, 10)
    for n in range(11):
        lhs = fam[n].compose_linear(2.0, -1.0).scale(1.0 / 2.0**n)
        rhs = euler_poly(n)
        assert (lhs - rhs).max_abs() < 1e-10
    assert euler_poly(1) == apostol_euler_poly(1, 1)
    assert [float(c) for c in euler_poly(1).coeffs] == [-0.5, 1.0]


@pytest.mark.parametrize("lam", [0.5, 1.0, 3.0, -2.5])
def test_apostol_reduction(lam):
    report = apostol_reduction_check(lam, 6)
    assert report.ok
    assert max(report.errors) < 1e-10


def test_apostol_degree_zero():
    for lam in (Fraction(1, 2), Fraction(3)):
        assert apostol_euler_poly(0, lam).coeffs == (2 / (lam + 1),)


@pytest.mark.parametrize("lam", [0.0, -1.0])
def test_apostol_rejects_lambda(lam):
    with pytest.raises(InvalidParameter):
        apostol_reduction_check(lam, 2)


def test_generic_route_rejects_roots():
    with pytest.raises(InvalidParameter):
        aed_family(0.0, 0.0, 3)
    s1 = zeros_s(0.0, 1)[1]
    with pytest.raises(InvalidParameter):
        aed_family(0.0, 1j * s1, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_limit_is_linear_in_u(n):
    report = bernoulli_limit_check(Fraction(0), n, [1e-2, 1e-3])
    assert 7 <= report.ratios[0] <= 13
    assert report.slopes[0] == pytest.approx(1.0, abs=0.15)


def test_limit_degree_zero_is_exact():
    assert bernoulli_limit_check(Fraction(1, 2), 0, [0.1, 0.01]).errors == (0.0, 0.0)


def test_limit_in_classical_case():
    report = bernoulli_limit_check(Fraction(-1, 2), 3, [1e-2, 1e-3, 1e-4])
    assert report.errors[-1] < 1e-3
    assert all(7 <= r <= 13 for r in report.ratios)


def test_limit_with_complex_steps():
    report = bernoulli_limit_check(0.0, 2, [1e-2j, 1e-3j])
    assert report.errors[1] < report.errors[0]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([-0.5, 0.0, 0.5, 2.0]), st.integers(1, 10), st.integers(0, 6))
def test_derivatives_at_s_zeros(a, l, k):
    s = zeros_s(a, 10)[l]
    z = 1j * s
    p, _ = deriv_polys(a, k)
    lhs = calI_deriv(a, k, z)
    rhs = calI(a, z) * p(z)
    assert abs(lhs - rhs) <= 1e-10 * max(abs(rhs), abs(calI(a, z)))
