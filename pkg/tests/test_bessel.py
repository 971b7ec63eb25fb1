from __future__ import annotations

import json
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from dunkl_series.appell import gamma_ladder
from dunkl_series.bessel import (
    calI,
    calI_at_izero,
    calI_deriv,
    calI_imag,
    deriv_polys,
    dunkl_kernel,
    zeros_j,
    zeros_s,
)
from dunkl_series.errors import InvalidParameter, PoleError

GRID = (-0.5, 0.0, 0.5, 2.0)


def mp_calI(alpha, z):
    """``2^a Gamma(a+1) J_a(iz) / (iz)^a`` as the hypergeometric ``0F1(; a+1; z^2/4)``."""
    mpmath.mp.dps = 40
    return complex(mpmath.hyp0f1(alpha + 1, (mpmath.mpc(z) / 2) ** 2))


# -- calI ---------------------------------------------------------------------


def test_calI_at_origin():
    for a in (-0.5, 0.0, Fraction(3, 2), 4.0):
        assert calI(a, 0.0) == 1


def test_calI_elementary_cases():
    assert calI(-0.5, 1.0) == pytest.approx(1.5430806348152437, rel=1e-15)
    assert calI(0.5, 1.0) == pytest.approx(1.1752011936438014, rel=1e-15)


@settings(max_examples=60, deadline=None)
@given(st.complex_numbers(max_magnitude=20, allow_nan=False, allow_infinity=False))
def test_calI_cosh(z):
    assert abs(calI(-0.5, z) - np.cosh(z)) <= 1e-12 * max(1.0, abs(np.cosh(z)))


@pytest.mark.parametrize("alpha", [-0.75, -0.5, 0.0, 0.5, 2.0, 7.25])
@pytest.mark.parametrize("z", [0.3, 2.5 + 1j, 7j, -4 + 3j, 12.0])
def test_calI_against_mpmath(alpha, z):
    ref = mp_calI(alpha, z)
    assert abs(calI(alpha, complex(z)) - ref) <= 1e-12 * max(1.0, abs(ref))


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 2.0])
@pytest.mark.parametrize("x", [5.0, 35.0, 80.0, 400.0, 3000.0])
def test_calI_on_imaginary_axis(alpha, x):
    # I_a(i x) = 2^a Gamma(a+1) J_a(x) / x^a, oscillating and decaying
    ref = 2**alpha * math.gamma(alpha + 1) * special.jv(alpha, x) / x**alpha
    got = calI_imag(alpha, x)
    assert abs(got - ref) <= 1e-12 * 2**alpha * math.gamma(alpha + 1) / x ** (alpha + 0.5)
    assert calI(alpha, complex(0, x)).real == pytest.approx(got, rel=1e-12, abs=1e-300)


def test_calI_rejects_negative_integer():
    with pytest.raises(InvalidParameter):
        calI(-2, 1.0)


# -- Dunkl kernel ---------------------------------------------------------------


def test_kernel_exponential_case():
    assert dunkl_kernel(-0.5, 1.0) == pytest.approx(math.e, rel=1e-15)
    for z in (0.3 - 2j, 5j, -3.0):
        assert abs(dunkl_kernel(-0.5, z) - np.exp(z)) < 1e-12 * abs(np.exp(z))


def test_kernel_at_origin():
    assert dunkl_kernel(1.5, 0.0) == 1


def test_kernel_conjugation():
    x = 0.7
    assert abs(np.conj(dunkl_kernel(0.0, complex(0, x))) - dunkl_kernel(0.0, complex(0, -x))) < 1e-15


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(1, 2), Fraction(3)])
@pytest.mark.parametrize("z", [0.5, 3 - 4j, 10j, -9.0])
def test_kernel_power_series(alpha, z):
    lad = gamma_ladder(alpha, 120)
    acc = sum(z**n / float(lad[n]) for n in range(121))
    ref = dunkl_kernel(alpha, z)
    assert abs(acc - ref) <= 1e-12 * max(1.0, abs(ref))


# -- derivative decomposition ----------------------------------------------------


def test_deriv_polys_base_and_first():
    a = Fraction(1, 3)
    p0, q0 = deriv_polys(a, 0)
    assert p0.as_dict() == {0: 1} and q0.is_zero
    p1, q1 = deriv_polys(a, 1)
    assert p1.is_zero
    assert q1.as_dict() == {1: 1 / (2 * (a + 1))}


@pytest.mark.parametrize("a", [Fraction(0), Fraction(1, 2), Fraction(-1, 4), Fraction(3)])
def test_third_p(a):
    p3, _ = deriv_polys(a, 3)
    assert p3.as_dict() == {-1: -(2 * a + 1)}


def test_first_derivative_formula():
    for a in (-0.5, 0.0, 2.0):
        z = 0.5
        assert calI_deriv(a, 1, z) == pytest.approx(z / (2 * (a + 1)) * calI(a + 1, z), rel=1e-15)
        assert calI_deriv(a, 0, z) == calI(a, z)


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 2.0])
@pytest.mark.parametrize("z", [0.3, 1.1, 2.7, 0.4 + 0.9j])
def test_derivatives_against_mpmath(alpha, z):
    mpmath.mp.dps = 40
    f = lambda w: mpmath.hyp0f1(alpha + 1, (w / 2) ** 2)  # noqa: E731
    for k in range(9):
        ref = complex(mpmath.diff(f, mpmath.mpc(z), k))
        err = abs(calI_deriv(alpha, k, z) - ref) / max(1.0, abs(ref))
        assert err < 1e-6
        if abs(z) > 1:
            # the Laurent coefficients cancel like |z|^(1-k), harmless away from 0
            assert err < 1e-10


def test_second_derivative_finite_difference():
    h = 1e-3
    f = lambda z: calI(0.0, z)  # noqa: E731
    fd = (-f(1 + 2 * h) + 16 * f(1 + h) - 30 * f(1) + 16 * f(1 - h) - f(1 - 2 * h)) / (12 * h * h)
    assert abs(calI_deriv(0.0, 2, 1.0) - fd) < 1e-8


def test_derivative_pole_at_origin():
    with pytest.raises(PoleError):
        calI_deriv(0.0, 3, 0.0)


# -- zeros ---------------------------------------------------------------------------


def test_zeros_lebesgue_case():
    table = zeros_s(-0.5, 100)
    np.testing.assert_allclose(table.zeros, np.pi * np.arange(1, 101), rtol=1e-12)
    assert table[3] == pytest.approx(9.42477796076938, rel=1e-15)


def test_zeros_tan_equation():
    assert zeros_s(0.5, 1)[1] == pytest.approx(4.493409457909064, rel=1e-14)


@pytest.mark.parametrize("alpha", GRID)
def test_zeros_against_scipy(alpha):
    table = zeros_s(alpha, 100)
    if float(alpha + 1).is_integer():
        ref = special.jn_zeros(int(alpha + 1), 100)
    else:
        ref = np.array([float(mpmath.besseljzero(alpha + 1, j)) for j in range(1, 101)])
    np.testing.assert_allclose(table.zeros, ref, rtol=1e-13)


@pytest.mark.parametrize("alpha", GRID)
def test_zero_table_invariants(alpha):
    table = zeros_s(alpha, 300)
    assert np.all(table.zeros > 0) and np.all(np.diff(table.zeros) > 0)
    assert np.max(table.residuals) < 1e-12
    np.testing.assert_allclose(np.abs(calI_imag(alpha + 1, table.zeros)), table.residuals, atol=1e-14)


@pytest.mark.parametrize("alpha", GRID)
def test_interlacing(alpha):
    s = zeros_s(alpha, 200).zeros
    nxt = zeros_s(alpha + 1, 200).zeros
    assert np.all(s < nxt)
    assert np.all(nxt[:-1] < s[1:])


def test_zeros_j():
    assert zeros_j(0.0, 1)[1] == pytest.approx(2.404825557695773, rel=1e-15)
    np.testing.assert_allclose(zeros_j(0.5, 5).zeros, np.pi * np.arange(1, 6), rtol=1e-14)
    assert len(zeros_j(0.0, 0)) == 0
    np.testing.assert_array_equal(zeros_j(1.25, 10).zeros, zeros_s(0.25, 10).zeros)


@pytest.mark.parametrize("alpha", [-2.0, -3.0])
def test_zeros_reject_alpha(alpha):
    with pytest.raises(InvalidParameter):
        zeros_s(alpha, 1)
    with pytest.raises(InvalidParameter):
        zeros_j(alpha + 1, 1)


def test_zero_table_indexing_and_json():
    table = zeros_s(0.0, 3)
    with pytest.raises(IndexError):
        table[0]
    with pytest.raises(IndexError):
        table[4]
    d = json.loads(json.dumps(table.to_dict()))
    assert d["kind"] == "s" and d["alpha"] == 0.0
    assert d["zeros"] == [float(z) for z in table.zeros]
    assert len(d["residuals"]) == 3


def test_values_at_zeros():
    table = zeros_s(-0.5, 3)
    assert calI_at_izero(-0.5, table, 3) == pytest.approx(-1.0, rel=1e-14)
    table = zeros_s(0.0, 40)
    signs = [np.sign(calI_at_izero(0.0, table, j)) for j in range(1, 21)]
    assert signs == [(-1) ** j for j in range(1, 21)]
    # decay like s^(-alpha-1/2)
    v10, v40 = abs(calI_at_izero(0.0, table, 10)), abs(calI_at_izero(0.0, table, 40))
    predicted = (table[40] / table[10]) ** 0.5
    assert v10 / v40 == pytest.approx(predicted, rel=0.05)


def test_values_at_zeros_needs_matching_table():
    with pytest.raises(InvalidParameter):
        calI_at_izero(0.5, zeros_s(0.0, 2), 1)
