"""Principal-value sums over the zeros ``s_j`` of ``J_{alpha+1}`` and their
closed forms.

Six families are supported (``s_{-j} = -s_j``, ``m = k + 1``):

* ``Sigma(k)``   sum_{j>=1} s_j^(-2k)
* ``Rho(k)``     sum_{j>=1} 1 / (I_alpha(i s_j) s_j^(2k))
* ``EtaU(k,u)``  sum_{j!=0} (s_j - u)^(-m)
* ``EtaL(k,l)``  sum_{j!=0,l} (s_j - s_l)^(-m)
* ``OmegaU(k,u)`` sum_{j!=0} 1 / (I_alpha(i s_j) (s_j - u)^m)
* ``OmegaL(k,l)`` sum_{j!=0,l} 1 / (I_alpha(i s_j) (s_j - s_l)^m)

Doubly infinite sums are symmetric limits: the ``j`` and ``-j`` terms are
combined before accumulation.  Since ``I_alpha(i s_j)`` has sign ``(-1)^j``
the Rho and Omega families alternate; their tails are estimated with Boole
summation, the others with the Euler-Maclaurin midpoint rule, both driven by
a McMahon model of ``s_j`` calibrated on the last computed terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

from .apostol_euler import aed_family
from .appell import gamma_ladder, gamma_n
from .bernoulli import bernoulli_family, bernoulli_values
from .bessel import (
    ZeroTable,
    calI,
    calI_deriv,
    calI_imag,
    calI_taylor,
    deriv_polys,
    to_scalar,
    zeros_s,
)
from .calogero import calogero_numbers
from .errors import InvalidParameter, PoleError, PreconditionError
from .numerics import CompensatedAccumulator, gamma_fn, pochhammer, series_reciprocal

__all__ = [
    "SeriesKind",
    "Sigma",
    "Rho",
    "EtaU",
    "EtaL",
    "OmegaU",
    "OmegaL",
    "SeriesReport",
    "check_precondition",
    "truncated_sum",
    "closed_form",
    "sigma_exact",
    "rho_exact",
    "series_report",
    "corollary_recurrences",
    "partial_fraction_check",
    "mam_recurrence_check",
]

CALIBRATION_TERMS = 10


# --------------------------------------------------------------------------
# kinds
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesKind:
    name: str
    k: int
    u: complex | None = None
    l: int | None = None

    def __post_init__(self):
        if self.name in ("Sigma", "Rho"):
            if self.k < 1:
                raise InvalidParameter(f"{self.name} needs k >= 1")
        elif self.name in ("EtaU", "EtaL", "OmegaU", "OmegaL"):
            if self.k < 0:
                raise InvalidParameter(f"{self.name} needs k >= 0")
        else:
            raise InvalidParameter(f"unknown series kind {self.name!r}")
        if self.name.endswith("L") and (self.l is None or self.l < 1):
            raise InvalidParameter(f"{self.name} needs an index l >= 1")
        if self.name.endswith("U") and (self.u is None or self.u == 0):
            raise InvalidParameter(f"{self.name} needs a nonzero u")

    @property
    def alternating(self) -> bool:
        return self.name in ("Rho", "OmegaU", "OmegaL")

    @property
    def parameter(self):
        if self.u is not None:
            return self.u
        return self.l

    def label(self) -> str:
        if self.u is not None:
            return f"{self.name}(k={self.k}, u={_fmt_complex(self.u)})"
        if self.l is not None:
            return f"{self.name}(k={self.k}, l={self.l})"
        return f"{self.name}(k={self.k})"


def Sigma(k: int) -> SeriesKind:
    return SeriesKind("Sigma", k)


def Rho(k: int) -> SeriesKind:
    return SeriesKind("Rho", k)


def EtaU(k: int, u) -> SeriesKind:
    return SeriesKind("EtaU", k, u=complex(u))


def EtaL(k: int, l: int) -> SeriesKind:
    return SeriesKind("EtaL", k, l=l)


def OmegaU(k: int, u) -> SeriesKind:
    return SeriesKind("OmegaU", k, u=complex(u))


def OmegaL(k: int, l: int) -> SeriesKind:
    return SeriesKind("OmegaL", k, l=l)


def _fmt_complex(z) -> str:
    z = complex(z)
    return f"{z.real:.17g}" if z.imag == 0 else f"{z.real:.17g}{z.imag:+.17g}j"


# --------------------------------------------------------------------------
# preconditions
# --------------------------------------------------------------------------


def check_precondition(kind: SeriesKind, alpha) -> None:
    """Raise :class:`PreconditionError` if the symmetric partial sums of
    ``kind`` do not converge.

    For the alternating families the paired term behaves like
    ``s_j^(alpha + 1/2 - p)`` with ``p = 2k`` (Rho), ``k + 2`` (Omega, k even)
    or ``k + 1`` (Omega, k odd); the sum converges when that exponent is
    negative, and the closed forms hold on the same range.
    """
    a = complex(to_scalar(alpha)).real
    if kind.alternating:
        if kind.name == "Rho":
            bound, text = 2 * kind.k - 0.5, "Re alpha < 2k - 1/2"
        elif kind.k % 2 == 0:
            bound, text = kind.k + 1.5, "Re alpha < k + 3/2 (k even)"
        else:
            bound, text = kind.k + 0.5, "Re alpha < k + 1/2 (k odd)"
        if not a < bound:
            raise PreconditionError(f"{kind.label()} at alpha={alpha}: needs {text}")
    if not a > -2:
        raise PreconditionError("zero tables need alpha > -2")


# --------------------------------------------------------------------------
# term arrays
# --------------------------------------------------------------------------


def _pair(s, u, m: int):
    """``(s-u)^(-m) + (-s-u)^(-m)``, with the cancellation of odd ``m``
    removed algebraically."""
    a = s - u
    b = s + u
    if m % 2 == 0:
        return a ** (-m) + b ** (-m)
    acc = 0
    for i in range(m):
        acc = acc + b ** i * a ** (m - 1 - i)
    return 2 * u * acc / (a * b) ** m


@lru_cache(maxsize=32)
def _table(alpha: float, N: int) -> ZeroTable:
    return zeros_s(alpha, N)


@lru_cache(maxsize=32)
def _calI_at_zeros(alpha: float, N: int) -> np.ndarray:
    vals = calI_imag(alpha, _table(alpha, N).zeros)
    flips = np.sign(vals[1:]) == np.sign(vals[:-1])
    if np.any(flips):
        bad = int(np.flatnonzero(flips)[0]) + 2
        raise ArithmeticError(f"I_alpha(i s_j) fails to alternate at j={bad}")
    vals.setflags(write=False)
    return vals


def _terms(kind: SeriesKind, alpha: float, s: np.ndarray, inv_i: np.ndarray | None, sl=None):
    m = kind.k + 1
    if kind.name == "Sigma":
        t = s ** (-2.0 * kind.k)
    elif kind.name == "Rho":
        t = s ** (-2.0 * kind.k) * inv_i
    elif kind.name in ("EtaU", "OmegaU"):
        t = _pair(s.astype(complex), kind.u, m)
        if kind.name == "OmegaU":
            t = t * inv_i
    else:
        t = _pair(s.astype(complex), complex(sl), m)
        if kind.name == "OmegaL":
            t = t * inv_i
    return t


def _mcmahon_continuous(nu: float, x):
    beta = math.pi * (x + nu / 2.0 - 0.25)
    mu = 4.0 * nu * nu
    b8 = 8.0 * beta
    return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 ** 3)


def _model(kind: SeriesKind, alpha: float, sl=None) -> Callable:
    """Smooth ``g(x)`` with term_j ~ g(j) (or ``(-1)^j g(j)`` if alternating)."""
    nu = alpha + 1.0
    amp = 2.0 ** alpha * gamma_fn(alpha + 1.0) * math.sqrt(2.0 / math.pi)

    def g(x):
        s = _mcmahon_continuous(nu, np.asarray(x, dtype=float))
        inv = s ** (alpha + 0.5) / amp if kind.alternating else None
        return _terms(kind, alpha, s, inv, sl)

    return g


_GL_X, _GL_W = np.polynomial.legendre.leggauss(48)
_GL_V = (_GL_X + 1.0) / 2.0
_GL_W = _GL_W / 2.0


def _integral_to_infinity(g: Callable, a: float):
    """``int_a^inf g(x) dx`` through ``x = a / v``."""
    v = _GL_V
    return np.sum(_GL_W * g(a / v) * a / v ** 2)


def _diff(g: Callable, a: float, order: int, h: float):
    if order == 1:
        return (g(a + h) - g(a - h)) / (2 * h)
    # third derivative, central 5-point stencil
    return (g(a + 2 * h) - 2 * g(a + h) + 2 * g(a - h) - g(a - 2 * h)) / (2 * h ** 3)


def _tail(kind: SeriesKind, alpha: float, terms: np.ndarray, N: int, sl=None) -> complex:
    g = _model(kind, alpha, sl)
    if N >= 1:
        idx = np.arange(max(1, N - CALIBRATION_TERMS + 1), N + 1)
        model = g(idx.astype(float))
        actual = terms[idx - 1]
        if kind.alternating:
            actual = actual * np.where(idx % 2 == 0, 1.0, -1.0)
        ok = model != 0
        scale = complex(np.mean(actual[ok] / model[ok])) if ok.any() else 1.0
    else:
        scale = 1.0
    h = max(0.5, 0.02 * (N + 1))

    def gs(x):
        return complex(np.asarray(g(np.array([x])))[0])

    if kind.alternating:
        a = N + 1.0
        est = gs(a) / 2 - _diff(gs, a, 1, h) / 4 + _diff(gs, a, 3, h) / 48
        est *= -1.0 if (N + 1) % 2 else 1.0
    else:
        a = N + 0.5
        est = complex(_integral_to_infinity(g, a)) - _diff(gs, a, 1, h) / 24
    return scale * est


# --------------------------------------------------------------------------
# truncated sums
# --------------------------------------------------------------------------


def _real_if(kind: SeriesKind, z: complex):
    return z.real if kind.name in ("Sigma", "Rho") else z


def truncated_sum(kind: SeriesKind, alpha, N: int, with_tail: bool = True,
                  table: ZeroTable | None = None) -> tuple[complex, complex]:
    """(partial sum over ``|j| <= N``, tail estimate for ``|j| > N``)."""
    check_precondition(kind, alpha)
    a = float(to_scalar(alpha))
    if N < 0:
        raise InvalidParameter("N must be non-negative")
    need = max(N, kind.l or 0)
    if table is None:
        table = _table(a, need)
    elif len(table) < need:
        raise InvalidParameter(f"zero table has {len(table)} zeros, need {need}")
    s = np.asarray(table.zeros[:N], dtype=float)
    inv_i = None
    if kind.alternating:
        inv_i = 1.0 / _calI_at_zeros(a, len(table))[:N]
    sl = table[kind.l] if kind.l is not None else None
    with np.errstate(divide="ignore", invalid="ignore"):
        # the excluded index j = l produces 0^(-m) here and is replaced below
        terms = _terms(kind, a, s, inv_i, sl)
    acc = CompensatedAccumulator()
    for j in range(N):
        if kind.l is not None and j + 1 == kind.l:
            # j = l is excluded; only the mirrored index -l remains
            single = (-2.0 * sl) ** (-(kind.k + 1))
            if kind.name == "OmegaL":
                single /= float(_calI_at_zeros(a, len(table))[kind.l - 1])
            terms[j] = single
        acc.add(complex(terms[j]))
    partial = complex(acc.value)
    if kind.l is not None and N < kind.l:
        single = (-2.0 * sl) ** (-(kind.k + 1))
        if kind.name == "OmegaL":
            single /= float(calI_imag(a, sl))
        partial += single
    tail = _tail(kind, a, terms, N, sl) if with_tail else 0j
    return _real_if(kind, partial), _real_if(kind, complex(tail))


# --------------------------------------------------------------------------
# closed forms
# --------------------------------------------------------------------------


def _ratio_prefactor(alpha, k: int):
    return Fraction((-1) ** (k + 1)) / (4 ** k * math.factorial(k)) / pochhammer(alpha + 2, k - 1) \
        if isinstance(alpha, Fraction) else \
        (-1) ** (k + 1) / (4 ** k * math.factorial(k) * pochhammer(alpha + 2, k - 1))


def sigma_exact(alpha, k: int):
    """``(-1)^(k+1) B_2k(1) / (4^k k! (alpha+2)_(k-1))``; a Fraction for
    rational ``alpha``."""
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    fam = bernoulli_family(alpha, 2 * k)
    return _ratio_prefactor(alpha, k) * bernoulli_values(fam, 2 * k, 1)


def rho_exact(alpha, k: int):
    """``(-1)^(k+1) B_2k(0) / (4^k k! (alpha+2)_(k-1))``."""
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    fam = bernoulli_family(alpha, 2 * k)
    return _ratio_prefactor(alpha, k) * bernoulli_values(fam, 2 * k, 0)


def _l_recurrence(alpha, sl: float, i_l: float, K: int, omega: bool) -> list[complex]:
    """Solve the recurrences at ``u = s_l`` for the first ``K+1`` values.

    With ``D_m = I_alpha^(m)(i s_l) = I_alpha(i s_l) P_m(i s_l)`` the
    identity at index ``n`` reads

        sum_{j<=n} D_(n-j+1) / (i^(j+1) (n-j)!) x_j = R_n,

    ``x_j = value_j - 2(1+alpha)(-1)^j / s_l^(j+1)``.  ``D_1 = 0`` so the
    identity at ``n = k+1`` determines ``x_k`` with pivot ``D_2 / i^(k+1)``.
    """
    z = 1j * sl
    a = to_scalar(alpha)
    d = [i_l * complex(deriv_polys(alpha, m)[0](z)) for m in range(K + 4)]
    c = [2 * (1 + a) * (-1) ** j / sl ** (j + 1) for j in range(K + 1)]
    x: list[complex] = []
    for k in range(K + 1):
        n = k + 1
        if omega:
            rhs = d[n + 2] / (math.factorial(n + 1) * i_l)
        else:
            rhs = d[n + 2] / math.factorial(n + 1) - d[n] / math.factorial(n)
        for j in range(k):
            rhs -= d[n - j + 1] / (1j ** (j + 1) * math.factorial(n - j)) * x[j]
        pivot = d[2] / 1j ** (k + 1)
        if abs(pivot) == 0:
            raise ArithmeticError("singular recurrence pivot")
        x.append(rhs / pivot)
    return [c[j] + x[j] for j in range(K + 1)]


def closed_form(kind: SeriesKind, alpha, table: ZeroTable | None = None):
    """Closed-form value of ``kind`` at ``alpha``."""
    check_precondition(kind, alpha)
    a = to_scalar(alpha)
    k = kind.k
    if kind.name == "Sigma":
        return float(sigma_exact(alpha, k))
    if kind.name == "Rho":
        return float(rho_exact(alpha, k))
    if kind.name == "EtaU":
        u = kind.u
        cal = calogero_numbers(alpha, 1j * u, k)
        return complex(2 * (1 + a) * ((-1) ** k / u ** (k + 1) - 1j ** (k + 1) * cal[k]))
    if kind.name == "OmegaU":
        u = kind.u
        fam = aed_family(alpha, 1j * u, k)
        val = fam[k](0)
        denom = u * calI(alpha + 1, 1j * u) * to_scalar(gamma_n(alpha, k))
        return complex(2 * (1 + a) * ((-1) ** k / u ** (k + 1) - 1j ** k * val / denom))
    # L-kinds
    if table is None:
        table = _table(float(a), kind.l)
    sl = table[kind.l]
    i_l = float(calI_imag(alpha, sl))
    vals = _l_recurrence(alpha, sl, i_l, k, omega=kind.name == "OmegaL")
    return complex(vals[k])


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesReport:
    kind: SeriesKind
    alpha: object
    N: int
    partial_sum: complex
    tail_correction: complex
    corrected: complex
    closed_form: complex
    abs_err: float
    rel_err: float

    TSV_COLUMNS = ("kind", "k", "alpha", "u_or_l", "N", "partial", "tail", "corrected",
                   "closed", "abs_err", "rel_err")

    def to_dict(self) -> dict:
        def num(z):
            z = complex(z)
            return float(f"{z.real:.17g}") if z.imag == 0 else [float(f"{z.real:.17g}"), float(f"{z.imag:.17g}")]

        param = self.kind.parameter
        return {
            "kind": self.kind.name,
            "k": self.kind.k,
            "alpha": float(to_scalar(self.alpha)),
            "u_or_l": None if param is None else (param if isinstance(param, int) else num(param)),
            "N": self.N,
            "partial": num(self.partial_sum),
            "tail": num(self.tail_correction),
            "corrected": num(self.corrected),
            "closed": num(self.closed_form),
            "abs_err": float(f"{self.abs_err:.17g}"),
            "rel_err": float(f"{self.rel_err:.17g}"),
        }

    def to_tsv_row(self) -> str:
        def fmt(z):
            if z is None:
                return ""
            if isinstance(z, int):
                return str(z)
            return _fmt_complex(z) if not isinstance(z, float) else f"{z:.17g}"

        param = self.kind.parameter
        cells = [
            self.kind.name,
            str(self.kind.k),
            f"{float(to_scalar(self.alpha)):.17g}",
            fmt(param),
            str(self.N),
            _fmt_complex(self.partial_sum),
            _fmt_complex(self.tail_correction),
            _fmt_complex(self.corrected),
            _fmt_complex(self.closed_form),
            f"{self.abs_err:.17g}",
            f"{self.rel_err:.17g}",
        ]
        return "\t".join(cells)


def series_report(kind: SeriesKind, alpha, N: int, with_tail: bool = True) -> SeriesReport:
    partial, tail = truncated_sum(kind, alpha, N, with_tail)
    corrected = partial + tail
    closed = closed_form(kind, alpha)
    abs_err = abs(complex(corrected) - complex(closed))
    rel_err = abs_err / max(1e-300, abs(complex(closed)))
    return SeriesReport(kind, alpha, N, partial, tail, corrected, closed, abs_err, rel_err)


# --------------------------------------------------------------------------
# identities
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    label: str
    lhs: tuple
    rhs: tuple

    @property
    def residuals(self) -> tuple:
        return tuple(abs(complex(a) - complex(b)) for a, b in zip(self.lhs, self.rhs))

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def to_dict(self) -> dict:
        return {"label": self.label, "residuals": [float(r) for r in self.residuals]}


def corollary_recurrences(alpha, n: int) -> tuple[IdentityReport, IdentityReport]:
    """``n = sum_j (-1)^(j+1) 4^j (n-j+1)_j (alpha+n-j+2)_j sigma_j`` and the
    same sum over ``rho_j`` equal to ``-alpha-1``, for ``1..n``."""
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    sig = [None] + [sigma_exact(alpha, j) for j in range(1, n + 1)]
    rho = [None] + [rho_exact(alpha, j) for j in range(1, n + 1)]
    ls, lr, rs, rr = [], [], [], []
    for m in range(1, n + 1):
        s_sum = 0
        r_sum = 0
        for j in range(1, m + 1):
            w = (-1) ** (j + 1) * 4 ** j * pochhammer(m - j + 1, j) * pochhammer(alpha + m - j + 2, j)
            s_sum += w * sig[j]
            r_sum += w * rho[j]
        ls.append(s_sum)
        rs.append(m)
        lr.append(r_sum)
        rr.append(-alpha - 1)
    return IdentityReport("sigma", tuple(ls), tuple(rs)), IdentityReport("rho", tuple(lr), tuple(rr))


def _derivative_of_reciprocal(alpha, t: complex, m: int) -> complex:
    """``d^m/dt^m [1 / (t I_{alpha+1}(i t))]`` from Taylor coefficients."""
    c = calI_taylor(alpha + 1, 1j * t, m)
    # I_{alpha+1}(i(t+h)) = sum c_n (i h)^n
    f = [complex(c[n]) * 1j ** n for n in range(m + 1)]
    g = [t * f[0]] + [t * f[n] + f[n - 1] for n in range(1, m + 1)]
    inv = series_reciprocal(g)
    return inv[m] * math.factorial(m)


def partial_fraction_check(alpha, t, m: int | None, N: int) -> IdentityReport:
    """Compare both sides of a partial fraction expansion at ``t``.

    ``m is None``:  I_alpha(it)/(t I_{alpha+1}(it)) = 1/t + sum_{j!=0} 1/(t-s_j) / (2(alpha+1))
    ``m >= 0``:     m-th derivative of 1/(t I_{alpha+1}(it)) against
                    (-1)^m m! [1/t^(m+1) + sum_{j!=0} 1/((t-s_j)^(m+1) I_alpha(i s_j)) / (2(alpha+1))],
                    valid for Re alpha - m + 1/2 < 0.
    """
    t = complex(t)
    a = float(to_scalar(alpha))
    if t == 0:
        raise PoleError("t = 0 is a pole")
    table = _table(a, N)
    if N and np.min(np.abs(table.zeros - abs(t.real))) == 0 and t.imag == 0:
        raise PoleError("t is a zero of J_{alpha+1}")
    s = table.zeros[:N].astype(complex)
    if m is None:
        lhs = calI(alpha, 1j * t) / (t * calI(alpha + 1, 1j * t))
        kind = EtaU(0, t)
        terms = _pair(s, t, 1)  # (s-t)^-1 + (-s-t)^-1 = -(1/(t-s) + 1/(t+s))
        acc = CompensatedAccumulator().extend(complex(x) for x in terms).value
        tail = _tail(kind, a, terms, N)
        rhs = 1 / t - (complex(acc) + tail) / (2 * (a + 1))
        return IdentityReport(f"pfd1 alpha={a:g} t={_fmt_complex(t)}", (lhs,), (rhs,))
    if not a - m + 0.5 < 0:
        raise PreconditionError(f"pfd2 of order {m} needs Re alpha - m + 1/2 < 0, alpha={alpha}")
    lhs = _derivative_of_reciprocal(alpha, t, m)
    p = m + 1
    kind = OmegaU(m, t)
    inv_i = 1.0 / _calI_at_zeros(a, N)
    terms = _pair(s, t, p) * inv_i
    acc = CompensatedAccumulator().extend(complex(x) for x in terms).value
    tail = _tail(kind, a, terms, N)
    # (t-s)^-p + (t+s)^-p = (-1)^p [(s-t)^-p + (-s-t)^-p]
    series = (-1) ** p * (complex(acc) + tail)
    rhs = (-1) ** m * math.factorial(m) * (1 / t ** (m + 1) + series / (2 * (a + 1)))
    return IdentityReport(f"pfd2 m={m} alpha={a:g} t={_fmt_complex(t)}", (lhs,), (rhs,))


def mam_recurrence_check(alpha, K: int, u=None, l: int | None = None) -> IdentityReport:
    """Residuals of the derivative recurrences for ``k = 0..K``.

    With ``u``: the EtaU identity (weights ``1/(i^(j+1) (k-j)!)``, right side
    ``-I^(k)(iu)/k!``) and the OmegaU identity (weights ``1/(i^j (k-j)!)``,
    right side 0 for ``k >= 1`` and ``-i`` for ``k = 0``).
    With ``l``: the EtaL identity (right side
    ``I^(k+2)/(k+1)! - I^(k)/k!``) and the OmegaL identity (right side
    ``I^(k+2)/((k+1)! I) - [k = 0]``), all at ``i s_l``.
    Closed-form values come from :func:`closed_form`; the derivatives from
    :func:`calI_deriv`.
    """
    a = to_scalar(alpha)
    lhs, rhs = [], []
    if (u is None) == (l is None):
        raise InvalidParameter("give exactly one of u and l")
    if u is not None:
        u = complex(u)
        z = 1j * u
        d = [calI_deriv(alpha, m, z) for m in range(K + 2)]
        eta = [closed_form(EtaU(k, u), alpha) for k in range(K + 1)]
        omega = [closed_form(OmegaU(k, u), alpha) for k in range(K + 1)]
        c = [(-1) ** j * 2 * (1 + a) / u ** (j + 1) for j in range(K + 1)]
        for k in range(K + 1):
            le = sum(d[k - j + 1] / (1j ** (j + 1) * math.factorial(k - j)) * (eta[j] - c[j]) for j in range(k + 1))
            lo = sum(d[k - j + 1] / (1j ** j * math.factorial(k - j)) * (omega[j] - c[j]) for j in range(k + 1))
            lhs += [le, lo]
            rhs += [-d[k] / math.factorial(k), -1j if k == 0 else 0]
        return IdentityReport(f"U-recurrences alpha={float(a):g} u={_fmt_complex(u)}", tuple(lhs), tuple(rhs))
    table = _table(float(a), l)
    sl = table[l]
    z = 1j * sl
    i_l = float(calI_imag(alpha, sl))
    d = [calI_deriv(alpha, m, z) for m in range(K + 3)]
    eta = [closed_form(EtaL(k, l), alpha) for k in range(K + 1)]
    omega = [closed_form(OmegaL(k, l), alpha) for k in range(K + 1)]
    c = [(-1) ** j * 2 * (1 + a) / sl ** (j + 1) for j in range(K + 1)]
    for k in range(K + 1):
        le = sum(d[k - j + 1] / (1j ** (j + 1) * math.factorial(k - j)) * (eta[j] - c[j]) for j in range(k + 1))
        lo = sum(d[k - j + 1] / (1j ** (j + 1) * math.factorial(k - j)) * (omega[j] - c[j]) for j in range(k + 1))
        lhs += [le, lo]
        rhs += [d[k + 2] / math.factorial(k + 1) - d[k] / math.factorial(k),
                d[k + 2] / (math.factorial(k + 1) * i_l) - (1 if k == 0 else 0)]
    return IdentityReport(f"L-recurrences alpha={float(a):g} l={l}", tuple(lhs), tuple(rhs))
