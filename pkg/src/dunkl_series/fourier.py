"""The Fourier-Dunkl orthonormal system on ``L^2((-1, 1), dmu_alpha)`` and
expansions of Bernoulli-Dunkl polynomials and of the Dunkl kernel in it.

With ``s_{-j} = -s_j`` the system is

    e_0    = 2^((alpha+1)/2) Gamma(alpha+2)^(1/2),
    e_j(r) = 2^(alpha/2) Gamma(alpha+1)^(1/2) / |I_alpha(i s_j)| E_alpha(i s_j r).

Coefficients are ``c_j(f) = int f conj(e_j) dmu_alpha``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .appell import DensePoly, gamma_n, lambda_op
from .bernoulli import bernoulli_family
from .bessel import ZeroTable, calI, calI_imag, dunkl_kernel, to_scalar, zeros_s
from .errors import InvalidParameter, PoleError
from .numerics import (
    CompensatedAccumulator,
    gamma_fn,
    gauss_jacobi_01,
    integrate_mu,
    mu_normalization,
)
from .series import Sigma, truncated_sum

__all__ = [
    "FourierDunklSystem",
    "fourier_system",
    "e_j",
    "gram_matrix",
    "bd_coefficient",
    "bd_coefficient_quadrature",
    "bd_partial_sum",
    "ParsevalReport",
    "parseval_check",
    "hurwitz_coefficient",
    "BCVReport",
    "bcv_check",
    "kernel_expansion_coeffs",
    "kernel_coefficient_quadrature",
    "kernel_expansion_sum",
    "AdjointReport",
    "adjoint_check",
]

QUAD_ORDER = 96


@dataclass(frozen=True, eq=False)
class FourierDunklSystem:
    alpha: object
    table: ZeroTable
    norms: np.ndarray  # norms[j-1] = 2^(alpha/2) Gamma(alpha+1)^(1/2) / |I_alpha(i s_j)|
    _nodes: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def e0(self) -> float:
        a = float(to_scalar(self.alpha))
        return 2.0 ** ((a + 1) / 2) * math.sqrt(gamma_fn(a + 2))

    def s(self, j: int) -> float:
        """Signed zero ``s_j`` (``s_0 = 0``)."""
        if j == 0:
            return 0.0
        self._check_index(j)
        return math.copysign(self.table[abs(j)], j)

    def _check_index(self, j: int) -> None:
        if abs(j) > self.size:
            raise IndexError(f"|j|={abs(j)} exceeds the table length {self.size}")

    @property
    def coefficient_scale(self) -> float:
        """``2^(1+alpha/2) (alpha+1) Gamma(alpha+1)^(1/2)``."""
        a = float(to_scalar(self.alpha))
        return 2.0 ** (1 + a / 2) * (a + 1) * math.sqrt(gamma_fn(a + 1))


def fourier_system(alpha, J: int) -> FourierDunklSystem:
    """System with ``|j| <= J`` for ``alpha > -1``."""
    a = float(to_scalar(alpha))
    if not a > -1:
        raise InvalidParameter(f"the Fourier-Dunkl system needs alpha > -1, got {alpha}")
    table = zeros_s(alpha, J)
    vals = np.abs(calI_imag(alpha, table.zeros)) if J else np.empty(0)
    norms = 2.0 ** (a / 2) * math.sqrt(gamma_fn(a + 1)) / vals
    norms.setflags(write=False)
    return FourierDunklSystem(alpha, table, norms)


def _kernel_imag(alpha, x: np.ndarray) -> np.ndarray:
    """``E_alpha(i x)`` for a real array ``x``."""
    a = float(to_scalar(alpha))
    return calI_imag(alpha, x) + 1j * x / (2 * (a + 1)) * calI_imag(alpha + 1, x)


def e_j(system: FourierDunklSystem, j: int, x):
    """``e_j(x)`` for scalar or array ``x`` in [-1, 1]."""
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if j == 0:
        out = np.full(xs.shape, system.e0, dtype=complex)
    else:
        system._check_index(j)
        out = system.norms[abs(j) - 1] * _kernel_imag(system.alpha, system.s(j) * xs)
    return complex(out[0]) if np.ndim(x) == 0 else out


def _quadrature_nodes(alpha, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes ``r`` in (0, 1) and weights such that
    ``int f dmu = sum w (f(r) + f(-r)) / 2``."""
    rule = gauss_jacobi_01(float(to_scalar(alpha)), order)
    return np.sqrt(rule.nodes), rule.weights * mu_normalization(alpha)


def _e_at_nodes(system: FourierDunklSystem, j: int, order: int) -> tuple[np.ndarray, np.ndarray]:
    """``(e_j(r), e_j(-r))`` at the quadrature nodes, cached per system."""
    key = (j, order)
    if key not in system._nodes:
        r, _ = _quadrature_nodes(system.alpha, order)
        system._nodes[key] = (e_j(system, j, r), e_j(system, j, -r))
    return system._nodes[key]


def _inner(system: FourierDunklSystem, f_pos, f_neg, j: int, order: int) -> complex:
    """``int f conj(e_j) dmu`` from values of ``f`` at ``r`` and ``-r``."""
    _, w = _quadrature_nodes(system.alpha, order)
    ep, en = _e_at_nodes(system, j, order)
    return complex(np.sum(w * (f_pos * np.conj(ep) + f_neg * np.conj(en))) / 2)


def gram_matrix(system: FourierDunklSystem, J: int, order: int = QUAD_ORDER) -> np.ndarray:
    """``<e_j, e_k>`` for ``j, k = -J..J`` (row/column ``j + J``)."""
    idx = list(range(-J, J + 1))
    G = np.empty((len(idx), len(idx)), dtype=complex)
    for a, j in enumerate(idx):
        fp, fn = _e_at_nodes(system, j, order)
        for b, k in enumerate(idx):
            G[a, b] = _inner(system, fp, fn, k, order)
    return G


# --------------------------------------------------------------------------
# Bernoulli-Dunkl coefficients
# --------------------------------------------------------------------------


def _bd_poly(alpha, n: int) -> DensePoly:
    return bernoulli_family(alpha, n)[n]


def _poly_values(p: DensePoly, x: np.ndarray) -> np.ndarray:
    cs = [complex(c) if isinstance(c, complex) else float(c) for c in p.coeffs]
    if not cs:
        return np.zeros(np.shape(x))
    return np.polynomial.polynomial.polyval(x, cs)


def bd_coefficient(system: FourierDunklSystem, n: int, j: int) -> complex:
    """``c_j(B_n) = -(-i)^n gamma_n (-1)^j / (s_j^n 2^(1+alpha/2)(alpha+1)Gamma(alpha+1)^(1/2))``
    for ``j != 0`` and exactly 0 for ``j = 0``."""
    if n < 1:
        raise InvalidParameter("n must be at least 1")
    if j == 0:
        return 0j
    s = system.s(j)
    g = float(to_scalar(gamma_n(system.alpha, n)))
    return -((-1j) ** n) * g * (-1) ** (abs(j) % 2) / (s ** n * system.coefficient_scale)


def bd_coefficient_quadrature(system: FourierDunklSystem, n: int, j: int,
                              order: int = QUAD_ORDER) -> complex:
    """``int B_n conj(e_j) dmu_alpha`` by Gauss quadrature."""
    p = _bd_poly(system.alpha, n)
    r, _ = _quadrature_nodes(system.alpha, order)
    return _inner(system, _poly_values(p, r), _poly_values(p, -r), j, order)


def _neumaier_step(s: np.ndarray, c: np.ndarray, x: np.ndarray) -> np.ndarray:
    """One compensated addition per component; updates ``c`` in place."""
    t = s + x
    c += np.where(np.abs(s) >= np.abs(x), (s - t) + x, (x - t) + s)
    return t


def bd_partial_sum(system: FourierDunklSystem, n: int, J: int, x):
    """``sum_{0<|j|<=J} c_j(B_n) e_j(x)``, accumulated by ascending ``|j|``
    with ``+j`` before ``-j`` (compensated, independently at every point)."""
    if J > system.size:
        raise IndexError(f"J={J} exceeds the table length {system.size}")
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    re, im = np.zeros(xs.shape), np.zeros(xs.shape)
    re_c, im_c = np.zeros(xs.shape), np.zeros(xs.shape)
    for j in range(1, J + 1):
        for jj in (j, -j):
            t = bd_coefficient(system, n, jj) * e_j(system, jj, xs)
            re = _neumaier_step(re, re_c, t.real)
            im = _neumaier_step(im, im_c, t.imag)
    out = (re + re_c) + 1j * (im + im_c)
    return complex(out[0]) if np.ndim(x) == 0 else out


@dataclass(frozen=True)
class ParsevalReport:
    alpha: object
    n: int
    J: int
    coefficient_sum: float
    tail: float
    norm_squared: float

    @property
    def residual(self) -> float:
        """Relative gap without the tail estimate."""
        return abs(self.coefficient_sum - self.norm_squared) / self.norm_squared

    @property
    def rel_err(self) -> float:
        return abs(self.coefficient_sum + self.tail - self.norm_squared) / self.norm_squared

    def to_dict(self) -> dict:
        return {
            "alpha": float(to_scalar(self.alpha)),
            "n": self.n,
            "J": self.J,
            "coefficient_sum": self.coefficient_sum,
            "tail": self.tail,
            "norm_squared": self.norm_squared,
            "rel_err": self.rel_err,
        }


def parseval_check(system: FourierDunklSystem, n: int, J: int, order: int = QUAD_ORDER) -> ParsevalReport:
    """``sum_{|j|<=J} |c_j|^2 + tail`` against ``||B_n||^2`` by quadrature."""
    if n < 2:
        raise InvalidParameter("Parseval check needs n >= 2")
    if J > system.size:
        raise IndexError(f"J={J} exceeds the table length {system.size}")
    acc = CompensatedAccumulator()
    for j in range(1, J + 1):
        acc.add(abs(bd_coefficient(system, n, j)) ** 2)
        acc.add(abs(bd_coefficient(system, n, -j)) ** 2)
    # |c_j|^2 = K^2 s_j^(-2n), so the tail is 2 K^2 times the tail of sigma_n
    K = float(to_scalar(gamma_n(system.alpha, n))) / system.coefficient_scale
    _, sig_tail = truncated_sum(Sigma(n), system.alpha, J, table=system.table)
    p = _bd_poly(system.alpha, n)
    norm = integrate_mu(lambda r: np.abs(_poly_values(p, r)) ** 2, system.alpha, order)
    return ParsevalReport(system.alpha, n, J, float(acc.value), 2 * K * K * float(sig_tail), float(norm))


def hurwitz_coefficient(n: int, j: int) -> complex:
    """Coefficient of ``e_j`` at ``alpha = -1/2`` obtained from the classical
    expansion ``B_n(y) = -n!/(2 pi i)^n sum_{j!=0} e^(2 pi i j y)/j^n`` with
    ``y = (x+1)/2`` and the rescaling ``B_{n,-1/2}(x) = 2^n B_n((x+1)/2)``."""
    if j == 0:
        return 0j
    e_scale = 2.0 ** -0.25 * math.pi ** 0.25
    return -math.factorial(n) * (-1) ** (abs(j) % 2) / ((math.pi * 1j) ** n * j ** n * e_scale)


# --------------------------------------------------------------------------
# BCV identity and the kernel expansion
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BCVReport:
    alpha: object
    x: complex
    y: complex
    lhs: complex
    rhs: complex

    @property
    def rel_err(self) -> float:
        return abs(self.lhs - self.rhs) / max(abs(self.rhs), 1e-300)

    def to_dict(self) -> dict:
        return {
            "alpha": float(to_scalar(self.alpha)),
            "x": [self.x.real, self.x.imag],
            "y": [self.y.real, self.y.imag],
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "rel_err": self.rel_err,
        }


def _kernel_vec(alpha, z: np.ndarray) -> np.ndarray:
    return np.array([complex(dunkl_kernel(alpha, complex(v))) for v in z])


def bcv_check(alpha, x, y, order: int = 64) -> BCVReport:
    """``int E(ixr) E(-iyr) dmu(r)`` against
    ``(E(ix)E(-iy) - E(-ix)E(iy)) / (2^(alpha+1) Gamma(alpha+1) i (x-y))``."""
    x, y = complex(x), complex(y)
    if x == y:
        raise InvalidParameter("x and y must differ")
    if not float(to_scalar(alpha)) > -1:
        raise InvalidParameter("alpha must exceed -1")
    lhs = integrate_mu(lambda r: _kernel_vec(alpha, 1j * x * r) * _kernel_vec(alpha, -1j * y * r),
                       alpha, order)
    E = lambda z: complex(dunkl_kernel(alpha, z))  # noqa: E731
    num = E(1j * x) * E(-1j * y) - E(-1j * x) * E(1j * y)
    rhs = mu_normalization(alpha) * num / (1j * (x - y))
    return BCVReport(alpha, x, y, complex(lhs), complex(rhs))


def _check_t(system: FourierDunklSystem, t: complex) -> None:
    if t == 0:
        raise PoleError("t = 0 is excluded")
    if t.imag == 0 and system.size and np.min(np.abs(system.table.zeros - abs(t.real))) == 0:
        raise PoleError(f"t={t} is a zero of J_(alpha+1)")


def kernel_expansion_coeffs(system: FourierDunklSystem, t, j: int) -> complex:
    """``c_j(E_alpha(i t x))`` in closed form."""
    t = complex(t)
    _check_t(system, t)
    a = float(to_scalar(system.alpha))
    i_next = complex(calI(system.alpha + 1, 1j * t))
    base = 2.0 ** (a / 2 + 1) * (a + 1) * math.sqrt(gamma_fn(a + 1))
    if j == 0:
        return math.sqrt(2 * (a + 1)) * i_next / base
    s = system.s(j)
    return (-1) ** (abs(j) % 2) * t * i_next / (base * (t - s))


def kernel_coefficient_quadrature(system: FourierDunklSystem, t, j: int,
                                  order: int = QUAD_ORDER) -> complex:
    t = complex(t)
    r, _ = _quadrature_nodes(system.alpha, order)
    return _inner(system, _kernel_vec(system.alpha, 1j * t * r), _kernel_vec(system.alpha, -1j * t * r), j, order)


def kernel_expansion_sum(system: FourierDunklSystem, t, J: int, x) -> tuple[complex, complex]:
    """(left side, symmetric partial sum with ``|j| <= J``) of

        2(alpha+1) 2^(alpha/2) Gamma(alpha+1)^(1/2) E(itx) / (t I_{alpha+1}(it))
            = sqrt(2(alpha+1)) e_0 / t + sum_{j!=0} (-1)^j e_j(x) / (t - s_j).
    """
    t = complex(t)
    _check_t(system, t)
    x = float(x)
    a = float(to_scalar(system.alpha))
    pref = 2 * (a + 1) * 2.0 ** (a / 2) * math.sqrt(gamma_fn(a + 1))
    lhs = pref * complex(dunkl_kernel(system.alpha, 1j * t * x)) / (t * complex(calI(system.alpha + 1, 1j * t)))
    acc = CompensatedAccumulator()
    acc.add(math.sqrt(2 * (a + 1)) * system.e0 / t)
    for j in range(1, J + 1):
        for jj in (j, -j):
            acc.add((-1) ** (j % 2) * e_j(system, jj, x) / (t - system.s(jj)))
    return lhs, complex(acc.value)


# --------------------------------------------------------------------------
# adjointness
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class AdjointReport:
    alpha: object
    lhs: float
    rhs: float

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)

    def to_dict(self) -> dict:
        return {"alpha": float(to_scalar(self.alpha)), "lhs": self.lhs, "rhs": self.rhs,
                "residual": self.residual}


def adjoint_check(alpha, f: DensePoly, g: DensePoly, order: int = 64) -> AdjointReport:
    """``int (Lambda f) g dmu`` against
    ``(f(1)g(1) - f(-1)g(-1)) / (2^(alpha+1) Gamma(alpha+1)) - int f (Lambda g) dmu``."""
    lf = lambda_op(f, alpha)
    lg = lambda_op(g, alpha)
    lhs = integrate_mu(lambda r: _poly_values(lf, r) * _poly_values(g, r), alpha, order)
    boundary = float(f(1)) * float(g(1)) - float(f(-1)) * float(g(-1))
    rhs = boundary * mu_normalization(alpha) - integrate_mu(
        lambda r: _poly_values(f, r) * _poly_values(lg, r), alpha, order)
    return AdjointReport(alpha, float(lhs), float(rhs))
