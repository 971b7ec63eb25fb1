"""Command line interface.

Subcommands: ``poly``, ``zeros``, ``series``, ``fourier`` and ``verify``.
Output is JSON (default, with ``"schema": "1"``) or TSV.  Exit status: 0 on
success, 2 on usage errors, 3 on precondition violations, 4 when a
verification suite fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .apostol_euler import aed_at_izero, aed_family
from .bernoulli import bernoulli_family, classical_reduction_check
from .bessel import zeros_j, zeros_s
from .errors import DunklError, InvalidParameter, PoleError, PreconditionError
from .fourier import (
    bcv_check,
    bd_coefficient,
    bd_coefficient_quadrature,
    fourier_system,
    parseval_check,
)
from .numerics import parse_scalar
from .series import EtaL, EtaU, OmegaL, OmegaU, Rho, SeriesReport, Sigma, series_report
from .verify import run_suite

SCHEMA = "1"
EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 2, 3, 4

SERIES_KINDS = {
    "sigma": lambda k, u, l: Sigma(k),
    "rho": lambda k, u, l: Rho(k),
    "eta-u": lambda k, u, l: EtaU(k, u),
    "eta-l": lambda k, u, l: EtaL(k, l),
    "omega-u": lambda k, u, l: OmegaU(k, u),
    "omega-l": lambda k, u, l: OmegaL(k, l),
}


class UsageError(Exception):
    pass


def _scalar(text: str):
    try:
        return parse_scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse number {text!r}") from exc


def _arithmetic(alpha) -> str:
    return "rational" if isinstance(alpha, Fraction) else "float"


def _num(z):
    z = complex(z)
    return float(f"{z.real:.17g}") if z.imag == 0 else [float(f"{z.real:.17g}"), float(f"{z.imag:.17g}")]


def _fmt(z) -> str:
    z = complex(z)
    return f"{z.real:.17g}" if z.imag == 0 else f"{z.real:.17g}{z.imag:+.17g}j"


# --------------------------------------------------------------------------
# commands: each returns (result dict, tsv header, tsv rows, exit status)
# --------------------------------------------------------------------------


def cmd_poly(args, alpha):
    if args.family == "bernoulli":
        fam = bernoulli_family(alpha, args.max_n)
        result = {"family": "bernoulli", "polys": [p.to_dict() for p in fam.polys]}
        status = EXIT_OK
        if args.classical_check:
            rep = classical_reduction_check(args.max_n)
            result["classical_check"] = rep.to_dict()
            status = EXIT_OK if rep.ok else EXIT_VERIFY
    else:
        if args.u_at_jzero is not None:
            fam = aed_at_izero(alpha, zeros_j(alpha, args.u_at_jzero), args.u_at_jzero, args.max_n)
        elif args.u is not None:
            fam = aed_family(alpha, _scalar(args.u), args.max_n)
        else:
            raise UsageError("aed needs --u or --u-at-jzero")
        result = {"family": "aed", "u": _num(fam.u), "polys": [p.to_dict() for p in fam.polys]}
        status = EXIT_OK
    rows = []
    for n, p in enumerate(result["polys"]):
        for i, c in enumerate(p["coeffs"]):
            rows.append([str(n), str(i), c if isinstance(c, str) else _fmt(complex(*c) if isinstance(c, list) else c)])
    return result, ["n", "power", "coeff"], rows, status


def cmd_zeros(args, alpha):
    table = zeros_j(alpha, args.count) if args.kind == "j" else zeros_s(alpha, args.count)
    rows = [[str(j + 1), f"{z:.17g}", f"{r:.17g}"] for j, (z, r) in enumerate(zip(table.zeros, table.residuals))]
    return table.to_dict(), ["j", "zero", "residual"], rows, EXIT_OK


def cmd_series(args, alpha):
    u = _scalar(args.u) if args.u is not None else None
    if args.kind.endswith("-u") and u is None:
        raise UsageError(f"{args.kind} needs --u")
    if args.kind.endswith("-l") and args.l is None:
        raise UsageError(f"{args.kind} needs --l")
    kind = SERIES_KINDS[args.kind](args.k, u, args.l)
    rep = series_report(kind, alpha, args.terms, with_tail=args.tail)
    return rep.to_dict(), list(SeriesReport.TSV_COLUMNS), [rep.to_tsv_row().split("\t")], EXIT_OK


def cmd_fourier(args, alpha):
    if args.action == "coeffs":
        system = fourier_system(alpha, args.max_j)
        rows, entries = [], []
        for j in range(-args.max_j, args.max_j + 1):
            closed = bd_coefficient(system, args.n, j)
            quad = bd_coefficient_quadrature(system, args.n, j, args.order)
            entries.append({"j": j, "closed": _num(closed), "quadrature": _num(quad), "abs_err": abs(closed - quad)})
            rows.append([str(j), _fmt(closed), _fmt(quad), f"{abs(closed - quad):.17g}"])
        return {"n": args.n, "coefficients": entries}, ["j", "closed", "quadrature", "abs_err"], rows, EXIT_OK
    if args.action == "parseval":
        system = fourier_system(alpha, args.terms)
        rep = parseval_check(system, args.n, args.terms, args.order)
        d = rep.to_dict()
        return d, list(d), [[_fmt(v) if isinstance(v, float) else str(v) for v in d.values()]], EXIT_OK
    x, y = _scalar(args.x), _scalar(args.y)
    rep = bcv_check(alpha, x, y, args.order)
    d = rep.to_dict()
    return d, ["lhs", "rhs", "rel_err"], [[_fmt(rep.lhs), _fmt(rep.rhs), f"{rep.rel_err:.17g}"]], EXIT_OK


def cmd_verify(args, alpha):
    grid = None
    if args.alpha_grid:
        grid = [_scalar(t.strip()) for t in args.alpha_grid.split(",") if t.strip()]
    res = run_suite(args.suite, grid, seed=args.seed)
    d = res.to_dict()
    fail = res.first_failure
    if fail is not None:
        d["first_failure"] = fail.name
    rows = [[str(c.criterion), c.name, "pass" if c.passed else "FAIL", f"{c.error:.17g}", f"{c.tolerance:g}",
             "yes" if c.gating else "no"] for c in res.checks]
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(_envelope(args, alpha, d), fh, indent=2)
            fh.write("\n")
    return d, ["criterion", "check", "status", "rel_err", "tolerance", "gating"], rows, \
        EXIT_OK if res.passed else EXIT_VERIFY


COMMANDS = {"poly": cmd_poly, "zeros": cmd_zeros, "series": cmd_series, "fourier": cmd_fourier, "verify": cmd_verify}


# --------------------------------------------------------------------------
# parser and output
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dunkl-series", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, alpha_required=True):
        sp.add_argument("--alpha", required=alpha_required, help='"p/q" for exact arithmetic, or a decimal')
        sp.add_argument("--format", choices=("json", "tsv"), default="json")
        sp.add_argument("--output", help="write to this file instead of stdout")

    sp = sub.add_parser("poly", help="Bernoulli-Dunkl or Apostol-Euler-Dunkl coefficient tables")
    sp.add_argument("family", choices=("bernoulli", "aed"))
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--u", help="AED parameter u (complex allowed, e.g. 1.5j)")
    sp.add_argument("--u-at-jzero", type=int, help="use u = i j_l with j_l the l-th zero of J_alpha")
    sp.add_argument("--classical-check", action="store_true", help="compare with classical Bernoulli at alpha=-1/2")
    common(sp)

    sp = sub.add_parser("zeros", help="positive Bessel zeros")
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--kind", choices=("s", "j"), default="s", help="s: zeros of J_(alpha+1); j: zeros of J_alpha")
    common(sp)

    sp = sub.add_parser("series", help="truncated sum, tail and closed form")
    sp.add_argument("kind", choices=tuple(SERIES_KINDS))
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--u")
    sp.add_argument("--l", type=int)
    sp.add_argument("--terms", type=int, default=10_000)
    sp.add_argument("--tail", dest="tail", action="store_true", default=True)
    sp.add_argument("--no-tail", dest="tail", action="store_false")
    common(sp)

    sp = sub.add_parser("fourier", help="Fourier-Dunkl coefficients, Parseval and product identity")
    sp.add_argument("action", choices=("coeffs", "parseval", "bcv"))
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--max-j", type=int, default=12)
    sp.add_argument("--terms", type=int, default=10_000)
    sp.add_argument("--order", type=int, default=96)
    sp.add_argument("--x", default="1")
    sp.add_argument("--y", default="0")
    common(sp)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("suite", choices=("all", "exact", "series", "fourier"))
    sp.add_argument("--alpha-grid", help='comma separated, e.g. "-1/2,0,1/2,2"')
    sp.add_argument("--report", help="also write the JSON report to this path")
    sp.add_argument("--seed", type=int, default=0)
    common(sp, alpha_required=False)
    return p


def _config(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("command", "format", "output")}


def _envelope(args, alpha, result: dict) -> dict:
    head = {"schema": SCHEMA, "command": args.command, "config": _config(args)}
    if alpha is not None:
        head["arithmetic"] = _arithmetic(alpha)
    head["result"] = result
    return head


def _render(args, alpha, result, header, rows) -> str:
    if args.format == "json":
        return json.dumps(_envelope(args, alpha, result), indent=2) + "\n"
    lines = [f"# schema={SCHEMA}", f"# command={args.command}"]
    lines += [f"# {k}={v}" for k, v in _config(args).items()]
    if alpha is not None:
        lines.append(f"# arithmetic={_arithmetic(alpha)}")
    lines.append("\t".join(header))
    lines += ["\t".join(r) for r in rows]
    return "\n".join(lines) + "\n"


VALUE_OPTIONS = ("--alpha", "--u", "--x", "--y", "--alpha-grid")


def _attach_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--alpha -1/2`` into ``--alpha=-1/2`` so argparse does not read
    the value as an option."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_OPTIONS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif len(nxt) > 1 and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] in ".j"):
                out.append(f"{tok}={nxt}")
            else:
                out += [tok, nxt]
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_attach_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        alpha = _scalar(args.alpha) if args.alpha is not None else None
        if isinstance(alpha, complex):
            raise UsageError("alpha must be real")
        result, header, rows, status = COMMANDS[args.command](args, alpha)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, InvalidParameter, PoleError, DunklError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text = _render(args, alpha, result, header, rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if status == EXIT_VERIFY and args.command == "verify":
        print(f"verification failed: {result.get('first_failure')}", file=sys.stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
