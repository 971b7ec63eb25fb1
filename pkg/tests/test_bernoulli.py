from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunkl_series.appell import DensePoly, gamma_ladder, lambda_op
from dunkl_series.bernoulli import (
    bernoulli_family,
    bernoulli_values,
    classical_reduction_check,
    x2nbd_reconstruct,
)
from dunkl_series.bessel import calI, dunkl_kernel
from dunkl_series.classical import bernoulli_numbers, bernoulli_poly
from dunkl_series.errors import InvalidParameter

ALPHAS = (Fraction(0), Fraction(1, 2), Fraction(-1, 4), Fraction(3))
rational_alpha = st.fractions(min_value=-Fraction(9, 10), max_value=20, max_denominator=16)


def poly(*cs):
    return DensePoly.make([Fraction(c) for c in cs])


@settings(max_examples=30)
@given(rational_alpha)
def test_low_degree_table(a):
    fam = bernoulli_family(a, 5)
    assert fam[0] == poly(1)
    assert fam[1] == poly(0, 1)
    assert fam[2] == poly(-(a + 1) / (a + 2), 0, 1)
    assert fam[3] == poly(0, -1, 0, 1)
    # the constant of the fourth polynomial is positive, as the classical case
    # 16 B_4(1/2) = 7/15 at alpha = -1/2 confirms
    assert fam[4] == poly((a + 4) * (a + 1) / ((a + 3) * (a + 2)), 0, -2, 0, 1)
    assert fam[5] == poly(0, (a + 4) / (a + 2), 0, -2 * (a + 3) / (a + 2), 0, 1)


def test_fourth_constant_in_classical_case():
    fam = bernoulli_family(Fraction(-1, 2), 4)
    assert fam[4](Fraction(0)) == 16 * bernoulli_poly(4)(Fraction(1, 2)) == Fraction(7, 15)


@pytest.mark.parametrize("a", ALPHAS)
def test_appell_property_exact(a):
    fam = bernoulli_family(a, 20)
    lad = gamma_ladder(a, 20)
    for n in range(1, 21):
        assert lambda_op(fam[n], a) == fam[n - 1].scale(lad.k(n))


@pytest.mark.parametrize("a", ALPHAS)
def test_parity_and_vanishing_at_one(a):
    fam = bernoulli_family(a, 19)
    for n in range(10):
        assert fam[2 * n].parity == "even"
        assert fam[2 * n + 1].parity == "odd"
    for n in range(1, 10):
        assert fam[2 * n + 1](Fraction(1)) == 0
        assert fam[2 * n + 1](Fraction(-1)) == 0


@pytest.mark.parametrize("a", ALPHAS)
def test_split_recurrence_rebuilds_monomials(a):
    fam = bernoulli_family(a, 21)
    for degree in range(22):
        assert x2nbd_reconstruct(fam, degree) == DensePoly.monomial(degree)


def test_special_values():
    a = Fraction(3, 7)
    fam = bernoulli_family(a, 4)
    assert bernoulli_values(fam, 2, 1) == 1 / (a + 2)
    assert bernoulli_values(fam, 3, 1) == 0
    assert bernoulli_values(fam, 2, 0) == -(a + 1) / (a + 2)
    with pytest.raises(InvalidParameter):
        bernoulli_values(fam, 5, 0)
    with pytest.raises(InvalidParameter):
        bernoulli_values(fam, 2, 2)


def test_classical_reduction():
    report = classical_reduction_check(16)
    assert report.ok
    assert all(e == 0 for e in report.errors)
    fam = bernoulli_family(Fraction(-1, 2), 3)
    assert fam[3].compose_linear(Fraction(2), Fraction(-1)) == poly(0, 4, -12, 8)
    assert fam[2].compose_linear(Fraction(2), Fraction(-1)) == poly(Fraction(2, 3), -4, 4)


def test_classical_numbers_oracle():
    b = bernoulli_numbers(8)
    assert b[:5] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    assert b[8] == Fraction(-1, 30)


@pytest.mark.parametrize("a", [0.0, 0.5, 2.0])
@pytest.mark.parametrize("x, t", [(0.3, 0.5), (1.0, 0.8), (-0.7, 0.2)])
def test_generating_function(a, x, t):
    fam = bernoulli_family(a, 40)
    lad = gamma_ladder(a, 40)
    total = sum(fam[n](x) * t**n / lad[n] for n in range(41))
    assert total * calI(a + 1, t) == pytest.approx(dunkl_kernel(a, x * t), rel=1e-10)


def test_float_alpha_family_close_to_exact():
    exact = bernoulli_family(Fraction(1, 4), 12)
    approx = bernoulli_family(0.25, 12)
    for n in range(13):
        for c_exact, c_float in zip(exact[n].coeffs, approx[n].coeffs):
            assert c_float == pytest.approx(float(c_exact), rel=1e-12, abs=1e-12)


def test_rejects_negative_integer():
    with pytest.raises(InvalidParameter):
        bernoulli_family(-3, 4)
