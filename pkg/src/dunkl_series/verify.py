"""Verification suites shared by the command line and the acceptance tests.

Each ``criterion_N`` function returns a list of :class:`Check` records.  A
check whose ``gating`` flag is false is informational: it is reported but
does not affect the suite outcome.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .apostol_euler import aed_family, apostol_reduction_check, bernoulli_limit_check
from .appell import DensePoly, dunkl_binom, dunkl_translate_bivariate, gamma_ladder, lambda_op
from .bernoulli import bernoulli_family, classical_reduction_check, x2nbd_reconstruct
from .bessel import calI_imag, zeros_j, zeros_s
from .classical import euler_poly
from .errors import PreconditionError
from .fourier import (
    bcv_check,
    bd_coefficient,
    bd_coefficient_quadrature,
    fourier_system,
    gram_matrix,
    hurwitz_coefficient,
    parseval_check,
)
from .series import (
    EtaL,
    EtaU,
    OmegaL,
    OmegaU,
    Rho,
    Sigma,
    closed_form,
    corollary_recurrences,
    mam_recurrence_check,
    partial_fraction_check,
    rho_exact,
    series_report,
    sigma_exact,
    truncated_sum,
)

__all__ = [
    "Check",
    "SuiteResult",
    "CRITERIA",
    "SUITES",
    "DEFAULT_GRID",
    "run_suite",
    "rho2_stated",
    "rho2_derived",
]

N_TERMS = 10_000
DEFAULT_GRID = (Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(2))
EXACT_ALPHAS = (Fraction(0), Fraction(1, 2), Fraction(-1, 4), Fraction(3))


@dataclass(frozen=True)
class Check:
    criterion: int
    name: str
    passed: bool
    error: float
    tolerance: float
    gating: bool = True

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "name": self.name,
            "passed": self.passed,
            "rel_err": float(f"{self.error:.17g}"),
            "tolerance": self.tolerance,
            "gating": self.gating,
        }


def _check(criterion: int, name: str, error: float, tol: float, gating: bool = True) -> Check:
    error = float(error)
    return Check(criterion, name, bool(error < tol) if tol > 0 else error == 0, error, tol, gating)


def _exact(criterion: int, name: str, equal: bool, gating: bool = True) -> Check:
    return Check(criterion, name, bool(equal), 0.0 if equal else 1.0, 0.0, gating)


def _rel(a, b) -> float:
    return abs(complex(a) - complex(b)) / max(abs(complex(b)), 1e-300)


def _label(a) -> str:
    return str(a) if isinstance(a, Fraction) else f"{a:g}"


# --------------------------------------------------------------------------
# 1-2: exact polynomial identities and classical reductions
# --------------------------------------------------------------------------


def criterion_1(alphas: Sequence = EXACT_ALPHAS) -> list[Check]:
    out = []
    for a in alphas:
        fam = bernoulli_family(a, 21)
        lad = gamma_ladder(a, 21)
        ok = all(not (lambda_op(fam[n], a) - fam[n - 1].scale(lad.k(n))).coeffs for n in range(1, 21))
        out.append(_exact(1, f"appell property n<=20 alpha={_label(a)}", ok))
        parity = all(fam[2 * n].parity == "even" and fam[2 * n + 1].parity == "odd" for n in range(1, 10))
        odd_at_one = all(fam[2 * n + 1](Fraction(1)) == 0 for n in range(1, 10))
        out.append(_exact(1, f"parity and B_2n+1(1)=0 alpha={_label(a)}", parity and odd_at_one))
        mono = all(not (x2nbd_reconstruct(fam, d) - DensePoly.monomial(d)).coeffs for d in range(0, 22))
        out.append(_exact(1, f"monomial reconstruction n<=10 alpha={_label(a)}", mono))
        tau_ok = True
        for k in range(13):
            lhs = dunkl_translate_bivariate(fam[k], a)
            rhs: dict = {}
            for j in range(k + 1):
                c = dunkl_binom(a, k, j)
                for i, b in enumerate(fam[j].coeffs):
                    if b != 0:
                        rhs[(i, k - j)] = rhs.get((i, k - j), 0) + c * b
            rhs = {key: v for key, v in rhs.items() if v != 0}
            tau_ok = tau_ok and lhs == rhs
        out.append(_exact(1, f"translation k<=12 alpha={_label(a)}", tau_ok))
    return out


def criterion_2() -> list[Check]:
    out = []
    rep = classical_reduction_check(16)
    out.append(_exact(2, "Bernoulli reduction n<=16", rep.ok))
    fam = aed_family(Fraction(-1, 2), 1j * math.pi / 2, 10)
    err = 0.0
    for n in range(11):
        lhs = fam[n].compose_linear(2.0, -1.0).scale(1.0 / 2.0 ** n)
        err = max(err, (lhs - euler_poly(n)).max_abs())
    out.append(_check(2, "Euler reduction n<=10", err, 1e-10))
    for lam in (Fraction(1, 2), Fraction(3)):
        rep = apostol_reduction_check(lam, 6)
        out.append(_check(2, f"Apostol-Euler reduction lambda={lam}", max(rep.errors), 1e-10))
    return out


# --------------------------------------------------------------------------
# 3-9, 11: zeros and series
# --------------------------------------------------------------------------


def criterion_3(grid: Sequence = DEFAULT_GRID) -> list[Check]:
    out = []
    for a in grid:
        tab = zeros_s(a, 100)
        res = float(np.max(np.abs(calI_imag(float(a) + 1, tab.zeros))))
        out.append(_check(3, f"zero residuals alpha={_label(a)}", res, 1e-12))
        if float(a) > -1:
            jt = zeros_j(a, 101)
            inter = bool(np.all(jt.zeros[:100] < tab.zeros) and np.all(tab.zeros < jt.zeros[1:101]))
            out.append(_exact(3, f"interlacing alpha={_label(a)}", inter))
        if a == Fraction(-1, 2):
            err = float(np.max(np.abs(tab.zeros / (np.pi * np.arange(1, 101)) - 1)))
            out.append(_check(3, "alpha=-1/2 zeros are j*pi", err, 1e-12))
    return out


def criterion_4(grid: Sequence = DEFAULT_GRID) -> list[Check]:
    out = []
    for a in grid:
        for k in range(1, 5):
            r = series_report(Sigma(k), a, N_TERMS)
            out.append(_check(4, f"sigma_{k} alpha={_label(a)}", r.rel_err, 1e-5))
        exact = isinstance(a, Fraction) and sigma_exact(a, 1) == 1 / (4 * (a + 2))
        out.append(_exact(4, f"sigma_1 = 1/(4(alpha+2)) alpha={_label(a)}", exact))
    return out


def rho2_stated(a):
    return -(a + 1) * (a + 2) / (32 * (a + 3) * (a + 2) ** 2)


def rho2_derived(a):
    return -(a + 1) * (a + 4) / (32 * (a + 2) ** 2 * (a + 3))


def criterion_5(grid: Sequence = (Fraction(-1, 2), Fraction(0), Fraction(1, 2)),
                stated_gating: bool = True) -> list[Check]:
    """``rho_1`` and ``rho_2``.  The stated ``rho_2`` expression gates when
    ``stated_gating`` is true and the corrected one gates otherwise; both are
    always reported."""
    out = []
    for a in grid:
        rho1 = -(a + 1) / (4 * (a + 2))
        out.append(_exact(5, f"rho_1 closed form alpha={_label(a)}", rho_exact(a, 1) == rho1))
        r1 = series_report(Rho(1), a, N_TERMS)
        out.append(_check(5, f"rho_1 truncation alpha={_label(a)}", abs(complex(r1.corrected) - float(rho1)), 1e-4))
        out.append(_exact(5, f"rho_2 closed form = stated alpha={_label(a)}",
                          rho_exact(a, 2) == rho2_stated(a), gating=stated_gating))
        p2, t2 = truncated_sum(Rho(2), a, N_TERMS)
        out.append(_check(5, f"rho_2 truncation vs stated alpha={_label(a)}",
                          abs(p2 + t2 - float(rho2_stated(a))), 1e-4, gating=stated_gating))
        out.append(_exact(5, f"rho_2 closed form = derived alpha={_label(a)}",
                          rho_exact(a, 2) == rho2_derived(a), gating=not stated_gating))
        out.append(_check(5, f"rho_2 truncation vs derived alpha={_label(a)}",
                          abs(p2 + t2 - float(rho2_derived(a))), 1e-4, gating=not stated_gating))
    return out


def criterion_6() -> list[Check]:
    a = Fraction(-1, 2)
    p, t = truncated_sum(Sigma(1), a, N_TERMS)
    out = [_check(6, "sum 1/j^2 = pi^2/6", abs(math.pi ** 2 * (p + t) - math.pi ** 2 / 6), 1e-8)]
    u = math.pi / 2
    leibniz = -math.pi / 4
    w = closed_form(OmegaU(0, u), a)
    out.append(_check(6, "Leibniz series via closed form", abs((u * w - 1) / 2 - leibniz), 1e-10))
    p, t = truncated_sum(OmegaU(0, u), a, N_TERMS)
    out.append(_check(6, "Leibniz series via truncation", abs((u * (p + t) - 1) / 2 - leibniz), 1e-5))
    ref = math.pi ** 3 * float(euler_poly(2)(Fraction(1, 2))) / 8
    w2 = closed_form(OmegaU(2, u), a)
    out.append(_check(6, "cubic Euler sum via closed form", abs((u ** 3 * w2 - 1) / 2 - ref), 1e-10))
    return out


def _reference_l(a: float, sl: float, i_l: float) -> dict:
    return {
        "eta_0": (3 + 2 * a) / (2 * sl),
        "eta_1": -(3 + 2 * a) * (7 + 2 * a) / (12 * sl ** 2) + 1 / 3,
        "omega_0": 2 * (1 + a) / sl - (1 + 2 * a) / (2 * sl * i_l),
        "omega_1": -2 * (1 + a) / sl ** 2 - (1 + (1 + 2 * a) * (2 * a - 3) / (2 * sl ** 2)) / (6 * i_l),
    }


def criterion_7(alphas: Sequence = (Fraction(0), Fraction(1, 2)), ls: Sequence = (1, 2, 5)) -> list[Check]:
    out = []
    for a in alphas:
        af = float(a)
        tab = zeros_s(a, max(ls))
        for l in ls:
            sl = tab[l]
            reference = _reference_l(af, sl, float(calI_imag(a, sl)))
            kinds = {"eta_0": EtaL(0, l), "eta_1": EtaL(1, l), "omega_0": OmegaL(0, l), "omega_1": OmegaL(1, l)}
            for key, kind in kinds.items():
                p, t = truncated_sum(kind, a, N_TERMS)
                out.append(_check(7, f"{key}^l truncation alpha={_label(a)} l={l}",
                                  abs(complex(p + t) - reference[key]), 1e-4))
        jt = zeros_j(a, max(ls))
        for l in ls:
            jl = jt[l]
            reference = [2 * (1 + af) / jl, 1 - 2 * (1 + af) / jl ** 2, (1 + 2 * af) / (2 * jl) + 2 * (1 + af) / jl ** 3]
            for k in range(3):
                out.append(_check(7, f"eta_{k} at j_l alpha={_label(a)} l={l}",
                                  abs(closed_form(EtaU(k, jl), a) - reference[k]), 1e-10))
    return out


def criterion_8(alphas: Sequence = (Fraction(-1, 2), Fraction(0), Fraction(1, 2))) -> list[Check]:
    out = []
    for a in alphas:
        sig, rho = corollary_recurrences(a, 4)
        out.append(_check(8, f"sigma recurrence alpha={_label(a)}", sig.max_residual, 1e-10))
        out.append(_check(8, f"rho recurrence alpha={_label(a)}", rho.max_residual, 1e-10))
        for l in (1, 2, 5):
            r = mam_recurrence_check(a, 4, l=l)
            out.append(_check(8, f"derivative recurrences at s_l alpha={_label(a)} l={l}", r.max_residual, 1e-9))
    return out


PFD_POINTS = (0.5 + 0.3j, 1.7 - 0.2j, 3.0 + 1.0j, -2.2 + 0.4j, 0.9j)


def _rejects(fn: Callable) -> bool:
    try:
        fn()
    except PreconditionError:
        return True
    return False


def criterion_9() -> list[Check]:
    out = []
    for a in (Fraction(0), Fraction(1, 2)):
        err = 0.0
        for t in PFD_POINTS:
            r = partial_fraction_check(a, t, None, N_TERMS)
            err = max(err, _rel(r.lhs[0], r.rhs[0]))
        out.append(_check(9, f"first expansion alpha={_label(a)}", err, 1e-5))
    a = Fraction(-1, 2)
    err = 0.0
    for t in PFD_POINTS:
        r = partial_fraction_check(a, t, 1, N_TERMS)
        err = max(err, _rel(r.lhs[0], r.rhs[0]))
    out.append(_check(9, "derivative expansion m=1 alpha=-1/2", err, 1e-5))
    gates = [
        lambda: partial_fraction_check(Fraction(0), 1.1, 0, 10),
        lambda: partial_fraction_check(Fraction(1, 2), 1.1, 1, 10),
        lambda: partial_fraction_check(Fraction(5, 2), 1.1, 2, 10),
        lambda: truncated_sum(Rho(1), Fraction(2), 10),
        lambda: closed_form(OmegaU(1, 0.5), Fraction(3, 2)),
    ]
    out.append(_exact(9, "precondition gates reject out-of-range alpha", all(_rejects(g) for g in gates)))
    return out


def criterion_11() -> list[Check]:
    out = []
    for n in (2, 3, 4):
        rep = bernoulli_limit_check(Fraction(0), n, [1e-2, 1e-3])
        ratio = rep.ratios[0]
        out.append(Check(11, f"limit ratio n={n}", 7 <= ratio <= 13, abs(ratio - 10) / 10, 0.3))
    return out


# --------------------------------------------------------------------------
# 10: Fourier-Dunkl
# --------------------------------------------------------------------------


def criterion_10(grid: Sequence = (Fraction(-1, 2), Fraction(0), Fraction(1, 2)), seed: int = 0) -> list[Check]:
    out = []
    for a in grid:
        system = fourier_system(a, N_TERMS)
        G = gram_matrix(system, 12, order=96)
        out.append(_check(10, f"orthonormality alpha={_label(a)}", float(np.max(np.abs(G - np.eye(25)))), 1e-9))
        err = max(abs(bd_coefficient(system, n, j) - bd_coefficient_quadrature(system, n, j))
                  for n in range(1, 7) for j in range(-12, 13))
        out.append(_check(10, f"coefficients vs quadrature alpha={_label(a)}", err, 1e-9))
        for n in (2, 3, 4):
            out.append(_check(10, f"Parseval n={n} alpha={_label(a)}", parseval_check(system, n, N_TERMS).rel_err, 1e-8))
    system = fourier_system(Fraction(-1, 2), 12)
    err = max(abs(bd_coefficient(system, 2, j) - hurwitz_coefficient(2, j)) for j in range(-12, 13))
    out.append(_check(10, "Hurwitz reduction n=2", err, 1e-10))
    rng = np.random.default_rng(seed)
    err = 0.0
    for i in range(10):
        a = grid[i % len(grid)]
        x, y = (complex(*rng.uniform(-3.5, 3.5, 2)) for _ in range(2))
        err = max(err, bcv_check(a, x, y).rel_err)
    out.append(_check(10, "BCV identity at 10 random points", err, 1e-10))
    return out


# --------------------------------------------------------------------------
# suites
# --------------------------------------------------------------------------


CRITERIA: dict[int, Callable[..., list[Check]]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
    11: criterion_11,
}

SUITES = {
    "exact": (1, 2),
    "series": (3, 4, 5, 6, 7, 8, 9, 11),
    "fourier": (10,),
}
SUITES["all"] = SUITES["exact"] + SUITES["series"] + SUITES["fourier"]


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.gating)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if c.gating and not c.passed), None)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def run_suite(suite: str, grid: Iterable | None = None, seed: int = 0) -> SuiteResult:
    """Run a named suite.  ``grid`` replaces the alpha grid of the series
    criteria that take one (3, 4 and, restricted to its gate, 5).  The
    stated ``rho_2`` comparison is reported without gating here; the
    corrected expression gates instead."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    grid = tuple(grid) if grid is not None else None
    checks: list[Check] = []
    for c in SUITES[suite]:
        if c == 5:
            g = grid if grid is not None else (Fraction(-1, 2), Fraction(0), Fraction(1, 2))
            g = tuple(a for a in g if float(a) < 1.5)
            checks += criterion_5(g, stated_gating=False)
        elif c in (3, 4) and grid is not None:
            checks += CRITERIA[c](grid)
        elif c == 10:
            checks += criterion_10(seed=seed)
        else:
            checks += CRITERIA[c]()
    return SuiteResult(suite, tuple(checks))
