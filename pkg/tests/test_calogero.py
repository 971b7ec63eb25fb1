from __future__ import annotations

import cmath
import math

import mpmath
import pytest

from dunkl_series.bessel import calI, zeros_j, zeros_s
from dunkl_series.calogero import calogero_at_izero, calogero_numbers, calogero_oracle
from dunkl_series.errors import InvalidParameter


def mp_taylor(alpha, u, N):
    """Taylor coefficients of ``I_alpha(w) / (w I_(alpha+1)(w))`` at ``w = u``."""
    mpmath.mp.dps = 40
    f = lambda w: mpmath.hyp0f1(alpha + 1, (w / 2) ** 2) / (w * mpmath.hyp0f1(alpha + 2, (w / 2) ** 2))  # noqa: E731
    return [complex(c) for c in mpmath.taylor(f, mpmath.mpc(u), N)]


@pytest.mark.parametrize("a", [0.0, 0.5, 2.0, -0.25])
@pytest.mark.parametrize("l", [1, 3])
def test_reference_values_at_zeros(a, l):
    table = zeros_j(a, 3)
    jl = table[l]
    nums = calogero_at_izero(a, table, l, 3)
    assert nums[0] == 0
    assert abs(nums[1] - 1 / (2 * (1 + a))) < 1e-14
    assert abs(nums[2] - (1 + 2 * a) / (4 * (1 + a) * 1j * jl)) < 1e-14
    assert abs(nums[3] - (-1 / (6 * (1 + a)) + (1 - 4 * a * a) / (12 * (1 + a) * jl**2))) < 1e-14


@pytest.mark.parametrize("a", [0.0, 0.5, 2.0])
def test_parity_in_i_at_zeros(a):
    nums = calogero_at_izero(a, zeros_j(a, 2), 2, 12)
    for n in range(1, 13):
        c = nums[n]
        leak = abs(c.imag) if n % 2 else abs(c.real)
        assert leak < 1e-12 * max(1.0, abs(c))


@pytest.mark.parametrize("a", [0.0, 0.5])
def test_zero_route_agrees_with_generic_route(a):
    table = zeros_j(a, 2)
    special = calogero_at_izero(a, table, 2, 8)
    generic = calogero_numbers(a, 1j * table[2], 8)
    for n in range(9):
        assert abs(special[n] - generic[n]) < 1e-10 * max(1.0, abs(special[n]))


def test_value_where_numerator_vanishes():
    # I_{-1/2}(i pi / 2) = cos(pi / 2) = 0
    nums = calogero_numbers(-0.5, 1j * math.pi / 2, 4)
    assert abs(nums[0]) < 1e-15


@pytest.mark.parametrize("a", [0.0, 0.5, 3.0])
@pytest.mark.parametrize("u", [0.8, 1.5 + 0.7j, 2.2j])
def test_generic_values_against_mpmath(a, u):
    nums = calogero_numbers(a, u, 8)
    ref = mp_taylor(a, u, 8)
    assert abs(nums[0] - calI(a, complex(u)) / (u * calI(a + 1, complex(u)))) < 1e-14
    for n in range(9):
        assert abs(nums[n] - ref[n]) < 1e-11 * max(1.0, abs(ref[n]))


@pytest.mark.parametrize("a", [0.0, 1.5])
@pytest.mark.parametrize("u", [0.8, 1.5 + 0.7j])
def test_series_division_oracle_and_residuals(a, u):
    nums = calogero_numbers(a, u, 10)
    oracle = calogero_oracle(a, u, 10)
    for n in range(11):
        assert abs(nums[n] - oracle[n]) < 1e-10 * max(1.0, abs(oracle[n]))
    assert max(nums.recurrence_residuals()) < 1e-10


def test_generating_function_near_u():
    a, u, N = 0.5, 1.2 + 0.4j, 30
    nums = calogero_numbers(a, u, N)
    # nearest singularities of w I_(alpha+1)(w) are 0 and +-i s_1
    s1 = zeros_s(a, 1)[1]
    radius = min(abs(u), abs(u - 1j * s1), abs(u + 1j * s1))
    t = radius / 2 * cmath.exp(0.7j)
    w = u + t
    closed = calI(a, w) / (w * calI(a + 1, w))
    assert abs(sum(nums[n] * t**n for n in range(N + 1)) - closed) < 1e-9 * abs(closed)


def test_json_shape():
    nums = calogero_numbers(0.0, 1.0, 3)
    values = nums.to_list()
    assert len(values) == 4 and all(len(v) == 2 for v in values)


def test_rejects_bad_points():
    with pytest.raises(InvalidParameter):
        calogero_numbers(0.0, 0.0, 2)
    with pytest.raises(InvalidParameter):
        calogero_numbers(0.0, 1j * zeros_s(0.0, 1)[1], 2)
    with pytest.raises(InvalidParameter):
        calogero_numbers(-1, 1.0, 2)
    with pytest.raises(InvalidParameter):
        calogero_at_izero(0.0, zeros_s(0.0, 2), 1, 2)
