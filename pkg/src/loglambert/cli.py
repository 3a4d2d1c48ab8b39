"""Command-line front end. Every subcommand writes CSV to standard output.

Exit status: 0 on success, 2 on a domain or parameter error, 3 when a solver
fails to converge. Diagnostics go to standard error.
"""
from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from . import core, thermostatics as th
from .errors import ConvergenceError, DomainError, LogLambertError, NumericalOverflowError

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_NONCONVERGENCE = 3

# abscissae x = n ln(n) e^n, n = 4..10, as printed to four decimals
TABLE_X = (302.7564, 1194.3088, 4337.0842, 14937.6471,
           49589.8229, 160238.6564, 507178.1179)

ENSEMBLES = {
    "mc": (th.Microcanonical, ("n", "v")),
    "ie": (th.IsoenthalpicIsobaric, ("n", "p")),
    "hill": (th.HillEnsemble, ("mu", "v")),
    "ray": (th.RayEnsemble, ("mu", "p", "n")),
}


def fmt(value) -> str:
    """Serialise a real so that it parses back to the identical binary64."""
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return format(float(value), ".17g")


class _Writer:
    def __init__(self, stream):
        self._w = csv.writer(stream, lineterminator="\n")

    def row(self, *fields):
        self._w.writerow([fmt(f) for f in fields])


def cmd_eval(args, out) -> int:
    branch = core.BranchId.parse(args.branch)
    ctx = core.branch_points(args.b)
    y, diag = core.evaluate(args.x, ctx, branch)
    deriv = None
    if diag.derivative_singular:
        print(f"note: x={args.x!r} is a branch point; derivative is unbounded",
              file=sys.stderr)
    else:
        deriv = core.derivative(args.x, ctx, branch)
    w = _Writer(out)
    w.row("x", "y", "derivative", "residual")
    w.row(args.x, y, deriv, diag.residual)
    return EXIT_OK


def table_rows():
    """``(x, exact, approx, rel_error)`` for the asymptotic-accuracy table at B = 1."""
    ctx = core.branch_points(1.0)
    rows = []
    for x in TABLE_X:
        exact, _ = core.evaluate(x, ctx, core.BranchId.POS_0)
        approx = core.asymptotic_approx(x, 1.0)
        rows.append((x, exact, approx, abs(approx - exact) / exact))
    return rows


def cmd_table(args, out) -> int:
    w = _Writer(out)
    w.row("x", "exact", "approx", "rel_error")
    for r in table_rows():
        w.row(*r)
    return EXIT_OK


def cmd_scan(args, out) -> int:
    if args.points < 2:
        raise DomainError("--points must be at least 2")
    branch = core.BranchId.parse(args.branch)
    ctx = core.branch_points(args.b)
    for end in (args.x_from, args.x_to):
        if not ctx.in_domain(end, branch):
            raise DomainError(core._domain_message(end, ctx, branch))
    w = _Writer(out)
    w.row("x", "y")
    for x in np.linspace(args.x_from, args.x_to, args.points):
        y, _ = core.evaluate(float(x), ctx, branch)
        w.row(float(x), y)
    return EXIT_OK


def build_ensemble(args):
    cls, needed = ENSEMBLES[args.ensemble]
    missing = [f"--{n}" for n in needed if getattr(args, n) is None]
    if missing:
        raise DomainError(f"ensemble {args.ensemble} needs {', '.join(missing)}")
    if args.ensemble == "mc":
        return cls(N=args.n, V=args.v)
    if args.ensemble == "ie":
        return cls(N=args.n, P=args.p)
    if args.ensemble == "hill":
        return cls(mu=args.mu, V=args.v)
    return cls(mu=args.mu, P=args.p, N=args.n)


def cmd_thermo(args, out) -> int:
    spec = build_ensemble(args)
    gc = th.GasConstants(D=args.d, m=args.m, h=args.h, k=args.k)
    dp = th.DeformationParams(args.q, args.qp, args.r)
    branch = th.select_branch(dp)
    th.derived_constants(spec, gc, dp)
    if args.points < 1:
        raise DomainError("--points must be at least 1")
    if not (0 < args.tmin <= args.tmax):
        raise DomainError("need 0 < --tmin <= --tmax")
    grid = np.linspace(args.tmin, args.tmax, args.points) if args.points > 1 else [args.tmin]

    w = _Writer(out)
    w.row("T", "heat", "specific_heat", "w_argument", "w_value", "branch", "reason")
    for T in grid:
        T = float(T)
        try:
            res = th.heat_function(spec, gc, dp, T)
        except (DomainError, NumericalOverflowError) as exc:
            w.row(T, None, None, None, None, branch.value, str(exc))
            continue
        reason = "" if res.specific_heat is not None else "specific heat singular at branch point"
        w.row(T, res.heat, res.specific_heat, res.w_argument, res.w_value,
              res.branch.value, reason)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="loglambert", allow_abbrev=False,
        description="Logarithmic Lambert function and deformed-entropy thermostatics.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", allow_abbrev=False, help="evaluate W_L at one point")
    e.add_argument("--x", type=float, required=True)
    e.add_argument("--b", type=float, required=True)
    e.add_argument("--branch", required=True, choices=[b.value for b in core.BranchId])
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table", allow_abbrev=False, help="asymptotic accuracy table (B = 1)")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("scan", allow_abbrev=False, help="sample one branch on a uniform x grid")
    s.add_argument("--b", type=float, required=True)
    s.add_argument("--branch", required=True, choices=[b.value for b in core.BranchId])
    s.add_argument("--from", dest="x_from", type=float, required=True)
    s.add_argument("--to", dest="x_to", type=float, required=True)
    s.add_argument("--points", type=int, default=101)
    s.set_defaults(func=cmd_scan)

    h = sub.add_parser("thermo", allow_abbrev=False, help="heat function sweep over temperature")
    h.add_argument("--ensemble", required=True, choices=sorted(ENSEMBLES))
    h.add_argument("--q", type=float, required=True)
    h.add_argument("--qp", type=float, required=True)
    h.add_argument("--r", type=float, required=True)
    h.add_argument("--n", type=int)
    h.add_argument("--v", type=float)
    h.add_argument("--p", type=float)
    h.add_argument("--mu", type=float)
    h.add_argument("--d", type=int, default=3)
    h.add_argument("--m", type=float, default=1.0)
    h.add_argument("--h", type=float, default=1.0)
    h.add_argument("--k", type=float, default=1.0)
    h.add_argument("--tmin", type=float, required=True)
    h.add_argument("--tmax", type=float, required=True)
    h.add_argument("--points", type=int, default=20)
    h.set_defaults(func=cmd_thermo)
    return p


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except (DomainError, NumericalOverflowError, LogLambertError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
