"""Normalised modified Bessel functions, the Dunkl kernel on the line, the
derivative decomposition ``I_a^(k) = I_a P_k + I_{a+1} Q_k`` and tables of
positive zeros of ``x -> I_nu(i x)``.

Here ``I_a(z) = Gamma(a+1) sum_n (z/2)^(2n) / (n! Gamma(n+a+1))``, which is
entire and even in ``z`` with ``I_a(0) = 1``.  For real ``x`` one has
``I_nu(i x) = 2^nu Gamma(nu+1) J_nu(x) / x^nu``.

Power series are summed in exact dyadic fixed point (Python integers), so the
alternating series at imaginary arguments loses nothing to cancellation.  For
large imaginary arguments the Hankel expansion of ``J_nu`` is used instead,
vectorised over numpy arrays.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import InvalidParameter, NonConvergence, PoleError
from .numerics import CompensatedAccumulator, gamma_fn, is_negative_integer

__all__ = [
    "calI",
    "calI_imag",
    "calI_deriv",
    "calI_taylor",
    "dunkl_kernel",
    "LaurentPoly",
    "deriv_polys",
    "ZeroTable",
    "zeros_s",
    "zeros_j",
    "calI_at_izero",
]


# --------------------------------------------------------------------------
# exact fixed-point series engine
# --------------------------------------------------------------------------


def _as_fraction(a) -> Fraction:
    if isinstance(a, Fraction):
        return a
    if isinstance(a, int):
        return Fraction(a)
    a = float(a)
    if not math.isfinite(a):
        raise InvalidParameter(f"non-finite value {a!r}")
    return Fraction(a)


def _gaussian_fraction(z):
    """``z`` as an exact pair of Fractions (real, imag)."""
    if isinstance(z, complex):
        return _as_fraction(z.real), _as_fraction(z.imag)
    if isinstance(z, np.complexfloating):
        return _as_fraction(float(z.real)), _as_fraction(float(z.imag))
    return _as_fraction(z), Fraction(0)


def _cmul(a, b):
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def _cpow(a, n):
    out = (Fraction(1), Fraction(0))
    base = a
    while n:
        if n & 1:
            out = _cmul(out, base)
        base = _cmul(base, base)
        n >>= 1
    return out


@lru_cache(maxsize=1 << 16)
def _taylor_coefficient_exact(alpha: Fraction, z, m: int) -> complex:
    """``I_alpha^(m)(z) / m!`` summed in fixed point with one rounding per
    term.  ``alpha`` must be a real dyadic (any float is) or rational."""
    re, im = taylor_coefficient_fraction(alpha, z, m)
    return complex(float(re), float(im))


def taylor_coefficient_fraction(alpha, z, m: int) -> tuple[Fraction, Fraction]:
    """``I_alpha^(m)(z) / m!`` as a pair of Fractions carrying at least 80
    significant bits (real ``alpha`` only)."""
    alpha = _as_fraction(alpha)
    zr, zi = _gaussian_fraction(z)
    w = _cmul((zr, zi), (zr, zi))
    w = (w[0] / 4, w[1] / 4)
    k0 = (m + 1) // 2
    a1 = alpha + 1
    poch = Fraction(1)
    for i in range(k0):
        poch *= a1 + i
    # first term C(2k0, m) z^(2k0-m) / (4^k0 k0! (alpha+1)_k0)
    first_scale = Fraction(math.comb(2 * k0, m), 4 ** k0 * math.factorial(k0)) / poch
    zp = _cpow((zr, zi), 2 * k0 - m)
    t0 = (zp[0] * first_scale, zp[1] * first_scale)
    if t0 == (0, 0) and (zr, zi) == (0, 0):
        return (Fraction(0) if m else Fraction(1)), Fraction(0)

    # ratio t_{k+1}/t_k = w (2k+2)(2k+1) / ((2k+2-m)(2k+1-m)(k+1)(k+alpha+1))
    aden = alpha.denominator
    anum = alpha.numerator
    wden = math.lcm(w[0].denominator, w[1].denominator)
    wr = w[0].numerator * (wden // w[0].denominator)
    wi = w[1].numerator * (wden // w[1].denominator)

    # magnitude pass in floating logs to size the fixed point
    absw = math.hypot(float(w[0]), float(w[1]))
    logw = math.log(absw) if absw > 0 else -math.inf
    mag0 = math.hypot(float(t0[0]), float(t0[1]))
    lt = math.log(mag0) if mag0 > 0 else -745.0
    lmax = lt
    k = k0
    while logw > -math.inf:
        r = (2 * k + 2) * (2 * k + 1) / ((2 * k + 2 - m) * (2 * k + 1 - m) * (k + 1) * abs(k + float(a1)))
        lt += logw + math.log(r)
        k += 1
        lmax = max(lmax, lt)
        if lt < lmax - 60 and k > abs(float(alpha)) + 2:
            break

    bits = max(0, 80 + math.ceil(lmax / math.log(2)))
    for _attempt in range(6):
        one = 1 << bits
        tr = (t0[0] * one).__round__()
        ti = (t0[1] * one).__round__()
        sr, si = tr, ti
        k = k0
        while tr or ti or k < k0 + 2 or k < abs(float(alpha)) + 2:
            num_k = wr * (2 * k + 2) * (2 * k + 1) * aden
            den_k = wden * (2 * k + 2 - m) * (2 * k + 1 - m) * (k + 1) * ((k + 1) * aden + anum)
            if den_k == 0:
                raise PoleError(f"I_alpha undefined for alpha={alpha}")
            num_i = wi * (2 * k + 2) * (2 * k + 1) * aden
            nr = tr * num_k - ti * num_i
            ni = tr * num_i + ti * num_k
            tr = _rdiv(nr, den_k)
            ti = _rdiv(ni, den_k)
            sr += tr
            si += ti
            k += 1
            if k > 100000:
                raise NonConvergence("series did not terminate")
        size = max(abs(sr), abs(si))
        if size.bit_length() >= 80 or size == 0 and _attempt >= 2:
            break
        bits += 80 - size.bit_length() + 16
    return Fraction(sr, one), Fraction(si, one)


def _rdiv(a: int, b: int) -> int:
    if b < 0:
        a, b = -a, -b
    return (2 * a + b) // (2 * b)


def _float_series(alpha, z, m: int) -> complex:
    """Plain compensated series for complex ``alpha``."""
    z = complex(z)
    k0 = (m + 1) // 2
    a1 = complex(alpha) + 1
    poch = 1.0 + 0j
    for i in range(k0):
        poch *= a1 + i
    t = math.comb(2 * k0, m) * z ** (2 * k0 - m) / (4 ** k0 * math.factorial(k0) * poch)
    acc = CompensatedAccumulator()
    acc.add(complex(t))
    w = z * z / 4
    k = k0
    small = 0
    while small < 3:
        t *= w * (2 * k + 2) * (2 * k + 1) / ((2 * k + 2 - m) * (2 * k + 1 - m) * (k + 1) * (k + a1))
        acc.add(complex(t))
        k += 1
        v = acc.value
        small = small + 1 if abs(t) < 1e-17 * abs(v) or t == 0 else 0
        if k > 100000:
            raise NonConvergence("series did not terminate")
    return complex(acc.value)


def _check_alpha(alpha):
    if is_negative_integer(alpha):
        raise InvalidParameter(f"alpha must not be a negative integer, got {alpha!r}")


def _is_real_scalar(a) -> bool:
    if isinstance(a, complex):
        return a.imag == 0
    return True


def _taylor_coefficient(alpha, z, m: int) -> complex:
    _check_alpha(alpha)
    if _is_real_scalar(alpha):
        a = alpha.real if isinstance(alpha, complex) else alpha
        return _taylor_coefficient_exact(_as_fraction(a), z, m)
    return _float_series(alpha, z, m)


def _real_result(z, value: complex):
    if isinstance(z, complex) or isinstance(z, np.complexfloating):
        return value
    return value.real


def calI(alpha, z):
    """``I_alpha(z)``; real for real ``z`` and real ``alpha``.

    >>> round(calI(-0.5, 1.0), 15)  # cosh(1)
    1.543080634815244
    """
    _check_alpha(alpha)
    if _is_real_scalar(alpha) and isinstance(z, complex) and z.real == 0 and z.imag != 0:
        a = alpha.real if isinstance(alpha, complex) else alpha
        if abs(z.imag) >= _hankel_threshold(float(a)):
            return complex(float(calI_imag(a, abs(z.imag))), 0.0)
    return _real_result(z, _taylor_coefficient(alpha, z, 0))


def calI_taylor(alpha, u, mmax: int) -> list:
    """Taylor coefficients ``I_alpha^(m)(u) / m!`` for ``m = 0..mmax``."""
    return [_real_result(u, _taylor_coefficient(alpha, u, m)) for m in range(mmax + 1)]


def dunkl_kernel(alpha, z):
    """``E_alpha(z) = I_alpha(z) + z/(2(alpha+1)) I_{alpha+1}(z)``."""
    _check_alpha(alpha)
    a1 = alpha + 1
    if isinstance(alpha, Fraction):
        a1 = Fraction(a1)
    return calI(alpha, z) + z / (2 * to_scalar(a1)) * calI(a1, z)


def to_scalar(a):
    return float(a) if isinstance(a, Fraction) else a


# --------------------------------------------------------------------------
# Hankel expansion for I_nu(i x), x large
# --------------------------------------------------------------------------

_PI = Fraction(
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899"
)


def _round_bits(f: Fraction, bits: int) -> float:
    e = math.floor(math.log2(f))
    scale = Fraction(2) ** (bits - 1 - e)
    return float(Fraction(round(f * scale)) / scale)


_PI1 = _round_bits(_PI, 32)
_PI2 = _round_bits(_PI - Fraction(_PI1), 32)
_PI3 = float(_PI - Fraction(_PI1) - Fraction(_PI2))
_HANKEL_EPS = 1e-17
_HANKEL_MAXTERMS = 80


def _hankel_terms_ok(nu: float, x: float) -> bool:
    mu = 4.0 * nu * nu
    a = 1.0
    prev = math.inf
    for k in range(1, _HANKEL_MAXTERMS):
        a *= (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        if abs(a) < _HANKEL_EPS:
            return True
        if abs(a) > prev and k > 1:
            return False
        prev = abs(a)
    return False


@lru_cache(maxsize=256)
def _hankel_threshold(nu: float) -> float:
    """Smallest ``x`` (on a 1/4 grid) from which the Hankel series of
    ``J_nu`` reaches ``1e-17`` before its terms start to grow."""
    x = max(8.0, abs(nu))
    while not _hankel_terms_ok(nu, x):
        x += 0.25 * max(1.0, x / 16)
    return x


def _bessel_j_hankel(nu: float, x: np.ndarray) -> np.ndarray:
    """``J_nu(x)`` for ``x >= _hankel_threshold(nu)``, vectorised."""
    mu = 4.0 * nu * nu
    a = np.ones_like(x)
    p = np.ones_like(x)
    q = np.zeros_like(x)
    active = np.ones(x.shape, dtype=bool)
    prev = np.full_like(x, np.inf)
    for k in range(1, _HANKEL_MAXTERMS):
        a = a * (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        mag = np.abs(a)
        active &= mag < prev
        prev = mag
        term = np.where(active, a, 0.0)
        sgn = -1.0 if (k // 2) % 2 else 1.0
        if k % 2 == 0:
            p = p + sgn * term
        else:
            q = q + sgn * term
        active &= mag >= _HANKEL_EPS * 1e-3
        if not active.any():
            break
    n = np.rint(x / math.pi)
    r = ((x - n * _PI1) - n * _PI2) - n * _PI3
    chi = r - (nu / 2.0 + 0.25) * math.pi
    sign = np.where(np.mod(n, 2.0) == 0.0, 1.0, -1.0)
    return np.sqrt(2.0 / (math.pi * x)) * sign * (p * np.cos(chi) - q * np.sin(chi))


def calI_imag(nu, x):
    """``I_nu(i x)`` for real ``nu > -1`` and real ``x`` (scalar or array).

    Uses the exact series below a threshold that depends on ``nu`` and the
    Hankel expansion above it.  Reliable for ``nu`` up to about 20.
    """
    _check_alpha(nu)
    scalar = np.ndim(x) == 0
    xs = np.abs(np.atleast_1d(np.asarray(x, dtype=float)))
    out = np.empty_like(xs)
    nu_f = float(nu)
    thr = _hankel_threshold(nu_f)
    big = xs >= thr
    if big.any():
        xb = xs[big]
        out[big] = (2.0 ** nu_f * gamma_fn(nu_f + 1.0)) * _bessel_j_hankel(nu_f, xb) / xb ** nu_f
    nu_q = nu if isinstance(nu, Fraction) else _as_fraction(nu_f)
    for i in np.flatnonzero(~big):
        out[i] = _taylor_coefficient_exact(nu_q, complex(0.0, xs[i]), 0).real
    return float(out[0]) if scalar else out


def _calI_imag_prime(nu, x):
    """``d/dx I_nu(i x) = -x/(2(nu+1)) I_{nu+1}(i x)``."""
    nu1 = nu + 1
    return -np.asarray(x) / (2.0 * float(nu1)) * calI_imag(nu1, x)


# --------------------------------------------------------------------------
# Laurent polynomials P_k, Q_k
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class LaurentPoly:
    """``sum_i coeffs[i] z^(low + i)``."""

    low: int
    coeffs: tuple

    @staticmethod
    def from_dict(d: dict) -> "LaurentPoly":
        d = {p: c for p, c in d.items() if c != 0}
        if not d:
            return LaurentPoly(0, ())
        lo, hi = min(d), max(d)
        zero = 0 * next(iter(d.values()))
        return LaurentPoly(lo, tuple(d.get(p, zero) for p in range(lo, hi + 1)))

    def as_dict(self) -> dict:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c != 0}

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly.from_dict({p - 1: p * c for p, c in self.as_dict().items()})

    def shift(self, power: int, scale) -> "LaurentPoly":
        return LaurentPoly.from_dict({p + power: c * scale for p, c in self.as_dict().items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = self.as_dict()
        for p, c in other.as_dict().items():
            d[p] = d.get(p, 0) + c
        return LaurentPoly.from_dict(d)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + other.shift(0, -1)

    def __call__(self, z):
        if self.low < 0 and z == 0:
            raise PoleError("Laurent polynomial has a pole at z = 0")
        total = 0
        for i, c in enumerate(self.coeffs):
            if c != 0:
                total += to_scalar(c) * z ** (self.low + i)
        return total


@lru_cache(maxsize=None)
def _deriv_polys_cached(alpha, k: int):
    if k == 0:
        one = Fraction(1) if isinstance(alpha, Fraction) else 1.0
        return LaurentPoly.from_dict({0: one}), LaurentPoly(0, ())
    p, q = _deriv_polys_cached(alpha, k - 1)
    c = 2 * (alpha + 1)
    p_next = p.derivative() + q.shift(-1, c)
    q_next = q.derivative() + p.shift(1, 1 / c) - q.shift(-1, c)
    return p_next, q_next


def deriv_polys(alpha, k: int) -> tuple[LaurentPoly, LaurentPoly]:
    """``(P_k, Q_k)`` with ``I_alpha^(k) = I_alpha P_k + I_{alpha+1} Q_k``.

    Coefficients are exact Fractions when ``alpha`` is rational.
    """
    _check_alpha(alpha)
    if k < 0:
        raise InvalidParameter("k must be non-negative")
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    return _deriv_polys_cached(alpha, k)


def calI_deriv(alpha, k: int, z):
    """``I_alpha^(k)(z)`` through the Laurent decomposition."""
    if k == 0:
        return calI(alpha, z)
    if z == 0:
        raise PoleError("calI_deriv uses Laurent polynomials with a pole at z = 0")
    p, q = deriv_polys(alpha, k)
    a1 = alpha + 1
    return calI(alpha, z) * p(z) + calI(a1, z) * q(z)


# --------------------------------------------------------------------------
# zero tables
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroTable:
    """Ascending positive zeros of ``x -> I_nu(i x)``.

    ``kind == "s"``: ``nu = alpha + 1`` (zeros of ``J_{alpha+1}``);
    ``kind == "j"``: ``nu = alpha`` (zeros of ``J_alpha``).
    """

    alpha: float
    kind: str
    zeros: np.ndarray
    residuals: np.ndarray

    def __len__(self) -> int:
        return len(self.zeros)

    def __getitem__(self, j: int) -> float:
        """One-based access: ``table[1]`` is the first positive zero."""
        if not 1 <= j <= len(self.zeros):
            raise IndexError(f"zero index {j} outside 1..{len(self.zeros)}")
        return float(self.zeros[j - 1])

    @property
    def order(self) -> float:
        return self.alpha + 1.0 if self.kind == "s" else self.alpha

    def to_dict(self) -> dict:
        return {
            "alpha": float(self.alpha),
            "kind": self.kind,
            "zeros": [float(f"{z:.17g}") for z in self.zeros],
            "residuals": [float(f"{r:.17g}") for r in self.residuals],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _mcmahon(nu: float, j: np.ndarray) -> np.ndarray:
    beta = math.pi * (j + nu / 2.0 - 0.25)
    mu = 4.0 * nu * nu
    b8 = 8.0 * beta
    return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 ** 3)


@lru_cache(maxsize=64)
def _positive_zeros(nu: float, count: int) -> tuple[np.ndarray, np.ndarray]:
    if count == 0:
        return np.empty(0), np.empty(0)
    step = 0.25
    upper = max(float(_mcmahon(nu, np.array([count]))[0]) + math.pi, 4.0)
    while True:
        grid = np.arange(0.0, upper + step, step)
        vals = calI_imag(nu, grid)
        change = np.flatnonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) <= 0)
        # a grid point that is an exact zero is reported twice
        change = change[np.concatenate(([True], np.diff(change) > 1))] if len(change) else change
        if len(change) >= count:
            break
        upper *= 1.5
    change = change[:count]
    lo = grid[change].copy()
    hi = grid[change + 1].copy()
    flo = vals[change].copy()
    x = (lo + hi) / 2.0
    for _ in range(100):
        f = calI_imag(nu, x)
        fp = _calI_imag_prime(nu, x)
        same = np.sign(f) == np.sign(flo)
        lo = np.where(same, x, lo)
        flo = np.where(same, f, flo)
        hi = np.where(same, hi, x)
        with np.errstate(divide="ignore", invalid="ignore"):
            x_new = x - f / fp
        bad = ~np.isfinite(x_new) | (x_new <= lo) | (x_new >= hi)
        x_new = np.where(bad, (lo + hi) / 2.0, x_new)
        done = (np.abs(x_new - x) <= 4.0 * np.spacing(x)) | (f == 0.0)
        x = np.where(f == 0.0, x, x_new)
        if done.all():
            break
    else:
        worst = int(np.argmax(np.abs(x_new - x)))
        raise NonConvergence(f"zero {worst + 1} of J_{nu} did not converge")
    res = np.abs(calI_imag(nu, x))
    x.setflags(write=False)
    res.setflags(write=False)
    return x, res


def _zero_table(alpha, count: int, kind: str) -> ZeroTable:
    if count < 0:
        raise InvalidParameter("count must be non-negative")
    nu = float(alpha) + (1.0 if kind == "s" else 0.0)
    zeros, res = _positive_zeros(nu, int(count))
    return ZeroTable(float(alpha), kind, zeros, res)


def zeros_s(alpha, count: int) -> ZeroTable:
    """First ``count`` positive zeros ``s_j`` of ``J_{alpha+1}``."""
    if not float(alpha) > -2.0:
        raise InvalidParameter(f"zeros_s needs alpha > -2, got {alpha!r}")
    return _zero_table(alpha, count, "s")


def zeros_j(alpha, count: int) -> ZeroTable:
    """First ``count`` positive zeros of ``J_alpha`` (``= zeros_s(alpha-1)``)."""
    if not float(alpha) > -1.0:
        raise InvalidParameter(f"zeros_j needs alpha > -1, got {alpha!r}")
    return _zero_table(alpha, count, "j")


def calI_at_izero(alpha, table: ZeroTable, j: int) -> float:
    """``I_alpha(i s_j)`` for an s-table of this ``alpha``; sign ``(-1)^j``."""
    if table.kind != "s" or float(alpha) != table.alpha:
        raise InvalidParameter("table must be the s-table for this alpha")
    return float(calI_imag(alpha, table[j]))


def calI_at_izeros(alpha, table: ZeroTable) -> np.ndarray:
    """``I_alpha(i s_j)`` for every zero in ``table``."""
    if table.kind != "s" or float(alpha) != table.alpha:
        raise InvalidParameter("table must be the s-table for this alpha")
    return calI_imag(alpha, table.zeros)
