"""Bernoulli-Dunkl polynomials, defined by

    E_alpha(x t) / I_{alpha+1}(t) = sum_n B_n(x) t^n / gamma_{n,alpha}.

They form an Appell-Dunkl sequence with ``1/A(t) = I_{alpha+1}(t)``, whose
Taylor coefficients are ``1/gamma_{2k,alpha+1}`` at even powers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .appell import DensePoly, appell_from_reciprocal, dunkl_binom, gamma_ladder
from .classical import bernoulli_poly
from .errors import InvalidParameter
from .numerics import is_negative_integer

__all__ = [
    "BernoulliDunklFamily",
    "bernoulli_family",
    "bernoulli_values",
    "x2nbd_reconstruct",
    "ReductionReport",
    "classical_reduction_check",
]


@dataclass(frozen=True)
class BernoulliDunklFamily:
    alpha: object
    polys: tuple

    def __getitem__(self, n: int) -> DensePoly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)


def _reciprocal_coeffs(alpha, N: int) -> list:
    """Taylor coefficients of ``I_{alpha+1}(t)`` up to ``t^N``."""
    shifted = gamma_ladder(alpha + 1, N)
    zero = Fraction(0) if isinstance(alpha, Fraction) else 0.0
    return [1 / shifted[n] if n % 2 == 0 else zero for n in range(N + 1)]


def bernoulli_family(alpha, N: int) -> BernoulliDunklFamily:
    """``B_0..B_N``; exact when ``alpha`` is rational.

    >>> bernoulli_family(Fraction(0), 2)[2].coeffs
    (Fraction(-1, 2), Fraction(0, 1), Fraction(1, 1))
    """
    if is_negative_integer(alpha):
        raise InvalidParameter(f"alpha must not be a negative integer, got {alpha!r}")
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    polys = appell_from_reciprocal(_reciprocal_coeffs(alpha, N), alpha)
    return BernoulliDunklFamily(alpha, tuple(polys))


def bernoulli_values(family: BernoulliDunklFamily, n: int, point: int):
    """``B_n(0)`` or ``B_n(1)``."""
    if point not in (0, 1):
        raise InvalidParameter("point must be 0 or 1")
    if not 0 <= n < len(family):
        raise InvalidParameter(f"n={n} outside the family (N={len(family) - 1})")
    p = family[n]
    return p.coeff(0) if point == 0 else sum(p.coeffs, p.coeff(0) * 0)


def x2nbd_reconstruct(family: BernoulliDunklFamily, degree: int) -> DensePoly:
    """Rebuild ``x^degree`` from the split even/odd recurrence

        x^(2n+e) = B_(2n+e) + (alpha+1) sum_{j<n} C_alpha(2n+e, 2j+e) B_(2j+e) / (alpha+n-j+1)

    with ``e`` in {0, 1}; the result must equal the monomial exactly.
    """
    alpha = family.alpha
    n, e = divmod(degree, 2)
    out = family[degree]
    for j in range(n):
        c = (alpha + 1) * dunkl_binom(alpha, degree, 2 * j + e) / (alpha + n - j + 1)
        out = out + family[2 * j + e].scale(c)
    return out


@dataclass(frozen=True)
class ReductionReport:
    """Per-degree comparison against a classical reference."""

    label: str
    degrees: tuple
    errors: tuple
    passed: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return all(self.passed)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "degrees": list(self.degrees),
            "errors": [float(e) for e in self.errors],
            "passed": list(self.passed),
        }


def classical_reduction_check(N: int) -> ReductionReport:
    """``B_{n,-1/2}(2x-1) = 2^n B_n(x)`` exactly for ``n <= N``."""
    fam = bernoulli_family(Fraction(-1, 2), N)
    errs, passed = [], []
    for n in range(N + 1):
        lhs = fam[n].compose_linear(Fraction(2), Fraction(-1))
        rhs = bernoulli_poly(n).scale(Fraction(2) ** n)
        diff = lhs - rhs
        errs.append(diff.max_abs())
        passed.append(not diff.coeffs)
    return ReductionReport("bernoulli", tuple(range(N + 1)), tuple(errs), tuple(passed))
