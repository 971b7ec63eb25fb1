"""Polynomials over a scalar field, the constants ``gamma_{n,alpha}``, the
Dunkl operator on the line and Appell-Dunkl sequences.

An Appell-Dunkl sequence ``A_n`` is defined by a generating function
``A(t) E_alpha(x t) = sum_n A_n(x) t^n / gamma_n``.  Writing
``1 / A(t) = sum_n a_n t^n`` gives the triangular system
``x^n = gamma_n sum_j A_j a_{n-j} / gamma_j`` solved by
:func:`appell_from_reciprocal`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidParameter
from .numerics import Field, field_of, is_negative_integer, pochhammer

__all__ = [
    "DensePoly",
    "GammaLadder",
    "gamma_ladder",
    "gamma_n",
    "dunkl_binom",
    "lambda_op",
    "dunkl_translate",
    "dunkl_translate_bivariate",
    "appell_from_reciprocal",
]


def _zero(field: Field):
    if field is Field.RATIONAL:
        return Fraction(0)
    if field is Field.REAL64:
        return 0.0
    return 0j


def _normalise_scalar(x):
    """Ints become Fractions so that rational arithmetic stays exact."""
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


@dataclass(frozen=True)
class DensePoly:
    """``sum_i coeffs[i] x^i`` with coefficients in one field.

    ``parity`` is ``"even"``, ``"odd"`` or ``"none"`` and is detected from the
    coefficients at construction when not supplied.
    """

    coeffs: tuple
    field: Field = Field.RATIONAL
    parity: str = "none"

    @staticmethod
    def make(coeffs: Iterable, field: Field | None = None) -> "DensePoly":
        cs = [_normalise_scalar(c) for c in coeffs]
        if field is None:
            field = field_of(*cs)
        if field is Field.REAL64:
            cs = [float(c) for c in cs]
        elif field is Field.COMPLEX128:
            cs = [complex(c) for c in cs]
        while cs and cs[-1] == 0:
            cs.pop()
        return DensePoly(tuple(cs), field, _detect_parity(cs))

    @staticmethod
    def monomial(n: int, field: Field = Field.RATIONAL) -> "DensePoly":
        one = Fraction(1) if field is Field.RATIONAL else (1.0 if field is Field.REAL64 else 1 + 0j)
        return DensePoly.make([0] * n + [one], field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _zero(self.field)

    def __call__(self, x):
        acc = _zero(self.field) if not self.coeffs else self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def __add__(self, other: "DensePoly") -> "DensePoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePoly.make(
            [self.coeff(i) + other.coeff(i) for i in range(n)],
            _join(self.field, other.field),
        )

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        return self + other.scale(-1)

    def __mul__(self, other: "DensePoly") -> "DensePoly":
        field = _join(self.field, other.field)
        if not self.coeffs or not other.coeffs:
            return DensePoly.make([], field)
        out = [_zero(field)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DensePoly.make(out, field)

    def scale(self, s) -> "DensePoly":
        s = _normalise_scalar(s)
        return DensePoly.make([c * s for c in self.coeffs], _join(self.field, field_of(s)))

    def compose_linear(self, a, b) -> "DensePoly":
        """``x -> p(a x + b)``."""
        lin = DensePoly.make([b, a])
        out = DensePoly.make([], _join(self.field, lin.field))
        for c in reversed(self.coeffs):
            out = out * lin + DensePoly.make([c], self.field)
        return out

    def max_abs(self) -> float:
        return max((abs(complex(c)) for c in self.coeffs), default=0.0)

    def to_dict(self) -> dict:
        if self.field is Field.RATIONAL:
            coeffs = [str(c) if c.denominator != 1 else f"{c.numerator}/1" for c in self.coeffs]
        elif self.field is Field.REAL64:
            coeffs = [float(f"{c:.17g}") for c in self.coeffs]
        else:
            coeffs = [[float(f"{c.real:.17g}"), float(f"{c.imag:.17g}")] for c in self.coeffs]
        return {"field": self.field.value, "coeffs": coeffs, "parity": self.parity}

    @staticmethod
    def from_dict(d: dict) -> "DensePoly":
        field = Field(d["field"])
        if field is Field.RATIONAL:
            cs = [Fraction(c) for c in d["coeffs"]]
        elif field is Field.REAL64:
            cs = [float(c) for c in d["coeffs"]]
        else:
            cs = [complex(re, im) for re, im in d["coeffs"]]
        return DensePoly.make(cs, field)


def _join(a: Field, b: Field) -> Field:
    order = [Field.RATIONAL, Field.REAL64, Field.COMPLEX128]
    return order[max(order.index(a), order.index(b))]


def _detect_parity(cs: Sequence) -> str:
    if not cs:
        return "even"
    if all(c == 0 for c in cs[1::2]):
        return "even"
    if all(c == 0 for c in cs[0::2]):
        return "odd"
    return "none"


# --------------------------------------------------------------------------
# gamma_{n, alpha}
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GammaLadder:
    """``gamma_0..gamma_N`` and ratios ``k_n = gamma_n / gamma_{n-1}``."""

    alpha: object
    values: tuple
    ratios: tuple  # ratios[0] is unused and stored as None

    def __getitem__(self, n: int):
        return self.values[n]

    def k(self, n: int):
        return self.ratios[n]


def _check_alpha(alpha):
    if is_negative_integer(alpha):
        raise InvalidParameter(f"alpha must not be a negative integer, got {alpha!r}")


def k_n(alpha, n: int):
    """``n + (alpha + 1/2)(1 - (-1)^n)``."""
    alpha = _normalise_scalar(alpha)
    return n if n % 2 == 0 else n + 2 * alpha + 1


def gamma_n(alpha, n: int):
    """Closed form ``gamma_{2k} = 4^k k! (alpha+1)_k``,
    ``gamma_{2k+1} = 2^(2k+1) k! (alpha+1)_(k+1)``."""
    _check_alpha(alpha)
    alpha = _normalise_scalar(alpha)
    k, odd = divmod(n, 2)
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    if odd:
        return 2 ** (2 * k + 1) * fact * pochhammer(alpha + 1, k + 1)
    return 4 ** k * fact * pochhammer(alpha + 1, k)


def gamma_ladder(alpha, N: int) -> GammaLadder:
    _check_alpha(alpha)
    alpha = _normalise_scalar(alpha)
    one = Fraction(1) if isinstance(alpha, Fraction) else 1.0
    values = [one]
    ratios = [None]
    for n in range(1, N + 1):
        kn = k_n(alpha, n)
        ratios.append(kn)
        values.append(values[-1] * kn)
    return GammaLadder(alpha, tuple(values), tuple(ratios))


def dunkl_binom(alpha, n: int, j: int):
    """``gamma_n / (gamma_j gamma_{n-j})``; ordinary binomials at alpha=-1/2."""
    if not 0 <= j <= n:
        raise InvalidParameter(f"need 0 <= j <= n, got n={n}, j={j}")
    lad = gamma_ladder(alpha, n)
    return lad[n] / (lad[j] * lad[n - j])


# --------------------------------------------------------------------------
# the Dunkl operator and translation on polynomials
# --------------------------------------------------------------------------


def lambda_op(p: DensePoly, alpha) -> DensePoly:
    """``Lambda_alpha f = f' + (alpha + 1/2)(f(x) - f(-x))/x``, which sends
    ``x^n`` to ``k_n x^(n-1)``."""
    alpha = _normalise_scalar(alpha)
    field = _join(p.field, field_of(alpha))
    return DensePoly.make([p.coeffs[n] * k_n(alpha, n) for n in range(1, len(p.coeffs))], field)


def dunkl_translate(p: DensePoly, y, alpha) -> DensePoly:
    """``tau_y p = sum_n y^n / gamma_n Lambda^n p`` (a finite sum)."""
    y = _normalise_scalar(y)
    alpha = _normalise_scalar(alpha)
    lad = gamma_ladder(alpha, max(p.degree, 0))
    field = _join(_join(p.field, field_of(y)), field_of(alpha))
    out = DensePoly.make([], field)
    cur = p
    yn = Fraction(1) if field is Field.RATIONAL else 1.0
    for n in range(p.degree + 1):
        out = out + cur.scale(yn / lad[n])
        cur = lambda_op(cur, alpha)
        yn = yn * y
    return out


def dunkl_translate_bivariate(p: DensePoly, alpha) -> dict:
    """``tau_y p`` as ``{(i, n): c}`` meaning ``c x^i y^n``."""
    alpha = _normalise_scalar(alpha)
    lad = gamma_ladder(alpha, max(p.degree, 0))
    out: dict = {}
    cur = p
    for n in range(p.degree + 1):
        for i, c in enumerate(cur.coeffs):
            if c != 0:
                out[(i, n)] = out.get((i, n), 0) + c / lad[n]
        cur = lambda_op(cur, alpha)
    return {key: v for key, v in out.items() if v != 0}


# --------------------------------------------------------------------------
# generic Appell-Dunkl solver
# --------------------------------------------------------------------------


def appell_from_reciprocal(a: Sequence, alpha) -> list[DensePoly]:
    """``A_0..A_N`` from the coefficients ``a_0..a_N`` of ``1/A(t)``.

    Solves ``x^n = gamma_n sum_{j<=n} A_j a_{n-j} / gamma_j`` in ascending
    ``n``; coefficients stay in the field of ``a`` and ``alpha``.
    """
    _check_alpha(alpha)
    if not a or a[0] == 0:
        raise InvalidParameter("appell_from_reciprocal needs a_0 != 0")
    a = [_normalise_scalar(x) for x in a]
    alpha = _normalise_scalar(alpha)
    field = _join(field_of(*a), field_of(alpha))
    lad = gamma_ladder(alpha, len(a) - 1)
    polys: list[DensePoly] = []
    for n in range(len(a)):
        rhs = DensePoly.monomial(n, field)
        for j in range(n):
            if a[n - j] != 0:
                rhs = rhs - polys[j].scale(lad[n] * a[n - j] / lad[j])
        polys.append(rhs.scale(1 / a[0]))
    return polys
