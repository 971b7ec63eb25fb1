"""Calogero-Dunkl numbers: Taylor coefficients in ``t`` of

    I_alpha(t+u) / ((t+u) I_{alpha+1}(t+u)).

With ``c_m = I_alpha^(m)(u)/m!`` and ``(t+u) I_{alpha+1}(t+u) =
2(alpha+1) I_alpha'(t+u)`` the numbers solve the triangular system
``c_n = sum_j a_j d_{n-j}`` with ``d_m = 2(alpha+1)(m+1) c_{m+1}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bessel import ZeroTable, calI, calI_taylor, deriv_polys, to_scalar
from .errors import InvalidParameter
from .numerics import is_negative_integer

__all__ = ["CalogeroNumbers", "calogero_numbers", "calogero_at_izero", "calogero_oracle"]

ROOT_THRESHOLD = 1e-12


@dataclass(frozen=True)
class CalogeroNumbers:
    alpha: object
    u: complex
    values: tuple
    numerator: tuple  # c_n = I_alpha^(n)(u) / n!
    denominator: tuple  # d_n = 2(alpha+1) I_alpha^(n+1)(u) / n!

    def __getitem__(self, n: int) -> complex:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def recurrence_residuals(self) -> list[float]:
        """``|c_n - sum_j a_j d_{n-j}|`` relative to ``max(|c_n|, 1)``."""
        out = []
        for n in range(len(self.values)):
            s = sum(self.values[j] * self.denominator[n - j] for j in range(n + 1))
            out.append(abs(self.numerator[n] - s) / max(abs(self.numerator[n]), 1.0))
        return out

    def to_list(self) -> list:
        return [[float(complex(v).real), float(complex(v).imag)] for v in self.values]


def _divide(num, den) -> list:
    out = []
    for n in range(len(num)):
        acc = num[n] - sum(out[j] * den[n - j] for j in range(n))
        out.append(acc / den[0])
    return out


def _check(alpha, u):
    if is_negative_integer(alpha) or alpha == -1:
        raise InvalidParameter(f"alpha must not be a negative integer, got {alpha!r}")
    if u == 0:
        raise InvalidParameter("u must be nonzero")


def calogero_numbers(alpha, u, N: int) -> CalogeroNumbers:
    """``a_0..a_N`` at a generic ``u``."""
    _check(alpha, u)
    u = complex(u)
    c = [complex(x) for x in calI_taylor(alpha, u, N + 1)]
    two_a1 = 2 * (to_scalar(alpha) + 1)
    d = [two_a1 * (m + 1) * c[m + 1] for m in range(N + 1)]
    if abs(d[0]) < ROOT_THRESHOLD * max(abs(c[0]), 1e-300) * abs(u):
        raise InvalidParameter(f"u={u} is a zero of I_(alpha+1)")
    return CalogeroNumbers(alpha, u, tuple(_divide(c[: N + 1], d)), tuple(c[: N + 1]), tuple(d))


def calogero_at_izero(alpha, table: ZeroTable, l: int, N: int) -> CalogeroNumbers:
    """``a_n`` at ``u = i j_l``.  There ``I_alpha^(k)(u) = I_{alpha+1}(u) Q_k(u)``
    and the common factor ``I_{alpha+1}(u)`` cancels, so ``a_0 = 0`` exactly."""
    if table.kind != "j" or float(alpha) != table.alpha:
        raise InvalidParameter("table must be the j-table for this alpha")
    u = complex(0.0, table[l])
    _check(alpha, u)
    q = [deriv_polys(alpha, m)[1] for m in range(N + 2)]
    c = [complex(q[m](u)) / math.factorial(m) for m in range(N + 2)]
    c[0] = 0j
    two_a1 = 2 * (to_scalar(alpha) + 1)
    d = [two_a1 * (m + 1) * c[m + 1] for m in range(N + 1)]
    return CalogeroNumbers(alpha, u, tuple(_divide(c[: N + 1], d)), tuple(c[: N + 1]), tuple(d))


def calogero_oracle(alpha, u, N: int) -> list[complex]:
    """Independent route: divide the Taylor series of ``I_alpha(t+u)`` by that
    of ``(t+u) I_{alpha+1}(t+u)`` (built from ``I_{alpha+1}``'s own series)."""
    _check(alpha, u)
    u = complex(u)
    num = [complex(x) for x in calI_taylor(alpha, u, N)]
    f = [complex(x) for x in calI_taylor(alpha + 1, u, N)]
    den = [u * f[0]] + [u * f[n] + f[n - 1] for n in range(1, N + 1)]
    return _divide(num, den)
