"""Classical Bernoulli, Euler and Apostol-Euler polynomials, built from their
defining recurrences / generating functions only.  They serve as independent
references for the reductions of the Dunkl families at ``alpha = -1/2``.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .appell import DensePoly
from .numerics import series_reciprocal

__all__ = ["bernoulli_numbers", "bernoulli_poly", "euler_poly", "apostol_euler_poly"]


def bernoulli_numbers(N: int) -> list[Fraction]:
    """``B_0..B_N`` from ``B_0 = 1`` and ``sum_{j<n} C(n, j) B_j = 0``."""
    b = [Fraction(1)]
    for n in range(2, N + 2):
        s = sum(math.comb(n, j) * b[j] for j in range(n - 1))
        b.append(-s / n)
    return b[: N + 1]


def bernoulli_poly(n: int) -> DensePoly:
    """``B_n(x) = sum_k C(n, k) B_k x^(n-k)``, exact."""
    b = bernoulli_numbers(n)
    cs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        cs[n - k] = math.comb(n, k) * b[k]
    return DensePoly.make(cs)


def apostol_euler_poly(n: int, lam) -> DensePoly:
    """Coefficients of ``t^n / n!`` in ``2 e^(x t) / (lam e^t + 1)``.

    Rational ``lam`` gives exact coefficients; ``lam = 1`` gives ``E_n(x)``.
    """
    lam = Fraction(lam) if isinstance(lam, int) else lam
    # denominator lam e^t + 1 as a power series in t
    den = [lam / math.factorial(m) for m in range(n + 1)]
    den[0] = den[0] + 1
    inv = series_reciprocal(den)
    # 2 e^(x t) / den: coefficient of t^n is sum_m inv[n-m] * 2 x^m / m!
    cs = [2 * inv[n - m] * math.factorial(n) / math.factorial(m) for m in range(n + 1)]
    if isinstance(lam, Fraction):
        cs = [Fraction(c) for c in cs]
    return DensePoly.make(cs)


def euler_poly(n: int) -> DensePoly:
    return apostol_euler_poly(n, Fraction(1))
