"""Command-line interface.

Five subcommands:

  eval      tabulate the four functions on an x grid
  zeros     locate positive zeros of the unmodified function
  rayleigh  reciprocal-square power sums by two independent routes
  verify    run certification checks over the built-in parameter corpus
  table     combined zeros + power-sum listing in long format

Output is CSV (default) or JSON, written to stdout or --out.  Floats are
rendered with format(v, ".16e") so repeated runs are byte-identical;
missing values become empty fields (CSV) or null (JSON).

Exit codes: 0 all checks passed or were not applicable, 1 at least one
check failed, 2 usage or parameter error, 3 numerical failure
(non-convergence, bracketing trouble).

--plot-dir DIR additionally renders matplotlib figures into DIR with
deterministic file names; the delimited output is unchanged by plotting.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Callable, Sequence

import numpy as np

from .core import (
    HalfIntFamily,
    Params,
    eval_capital_lambda,
    eval_lambda,
    eval_lommel_S,
    eval_modified_L,
)
from .errors import (
    AdmissibilityError,
    BracketingError,
    ConvergenceError,
    DegeneratePrefactorError,
    DomainError,
    ScanMissError,
)
from .inequalities import (
    DEFAULT_TOLERANCE,
    CheckReport,
    GridSpec,
    check_cosh_sinh_ratio,
    check_increasing_family,
    check_logconvex_geomconvex_x,
    check_param_monotone_logconvex,
    check_product_unimodal,
    check_ratio_increasing,
    check_ratio_logconvex,
    check_turan,
    redheffer_exponent_capital,
    redheffer_exponent_lambda,
)
from .rayleigh import compare_methods
from .zeros import ZeroTable, find_zeros

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

# verification corpus; grids are fixed so that reruns are reproducible
_MU_CORPUS = (-0.5, 0.0, 0.5, 1.0, 2.0)
_NU_CORPUS = (0.0, 0.25, 0.5, 1.0)
_FAMILY_CORPUS = (0.25, 0.5, 0.75, 1.0)
_MU_PAIRS = ((-0.5, 0.0), (0.0, 0.5), (0.5, 1.0), (1.0, 2.0), (2.0, 1.0))

CHECK_NAMES = (
    "thm2.1.i",
    "thm2.1.ii",
    "thm2.1.iii",
    "thm2.1.iv",
    "thm2.1.v",
    "turan.mu",
    "turan.nu",
    "thm3.1",
    "thm3.2",
    "thm3.3",
    "thm3.4",
    "thm3.5",
    "thm3.6",
)

_VERIFY_HEADER = (
    "check", "mu", "nu", "mu1", "nu1", "family_mu", "a", "k", "x",
    "x_min", "x_max", "points", "tolerance", "worst_margin", "violations",
    "status", "limit_a", "limit_b", "notes",
)


def _fmt_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        if math.isnan(v):
            return ""
        # v + 0.0 folds negative zero into the canonical representation
        return format(v + 0.0, ".16e")
    # notes and status fields never need commas; scrub defensively anyway
    return str(v).replace(",", ";")


def _json_cell(v):
    if isinstance(v, float) and math.isnan(v):
        return None
    return v


def _emit(header: Sequence[str], rows: Sequence[tuple], fmt: str, out: str | None) -> None:
    if fmt == "csv":
        lines = [",".join(header)]
        for r in rows:
            lines.append(",".join(_fmt_cell(c) for c in r))
        text = "\n".join(lines) + "\n"
    else:
        payload = [
            {k: _json_cell(c) for k, c in zip(header, r)} for r in rows
        ]
        text = json.dumps(payload, indent=2, allow_nan=False) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _plot_path(plot_dir: str, name: str) -> str:
    os.makedirs(plot_dir, exist_ok=True)
    return os.path.join(plot_dir, name)


def _resolve_tol(args, default: float) -> float:
    if args.tol is not None:
        tol = args.tol
    else:
        env = os.environ.get("LOMMEL_TOL")
        tol = float(env) if env else default
    if not (tol > 0.0) or not math.isfinite(tol):
        raise DomainError(f"tolerance must be positive and finite, got {tol}")
    return tol


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("csv", "json"), default="csv",
                    help="output format (default csv)")
    sp.add_argument("--out", default=None, metavar="PATH",
                    help="write output to PATH instead of stdout")
    sp.add_argument("--tol", type=float, default=None,
                    help="tolerance override (also via LOMMEL_TOL)")
    sp.add_argument("--plot-dir", default=None, metavar="DIR",
                    help="render figures as PNG files into DIR")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lommel",
        description="Lommel / modified Lommel function numerics and certification.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="tabulate function values on an x grid")
    e.add_argument("--mu", type=float, required=True)
    e.add_argument("--nu", type=float, default=0.5,
                   help="second parameter for the two-parameter functions (default 0.5)")
    e.add_argument("--x-min", type=float, default=0.0)
    e.add_argument("--x-max", type=float, default=10.0)
    e.add_argument("--points", type=int, default=101)
    _add_common(e)

    z = sub.add_parser("zeros", help="locate positive zeros of the unmodified function")
    z.add_argument("--mu", type=float, required=True)
    z.add_argument("--n-max", type=int, default=10)
    _add_common(z)

    r = sub.add_parser("rayleigh", help="power sums: recurrence route vs zero-sum route")
    r.add_argument("--mu", type=float, required=True)
    r.add_argument("--n-max", type=int, default=200,
                   help="zeros to sum before tail modeling (default 200)")
    r.add_argument("--big-m", type=int, default=8,
                   help="highest power-sum order (default 8)")
    _add_common(r)

    v = sub.add_parser("verify", help="run certification checks over the corpus")
    v.add_argument("--check", default="all",
                   help="one of %s or 'all'" % ", ".join(CHECK_NAMES))
    _add_common(v)

    t = sub.add_parser("table", help="combined zeros + power-sum listing")
    t.add_argument("--mu", type=float, required=True)
    t.add_argument("--n-max", type=int, default=10)
    t.add_argument("--big-m", type=int, default=8)
    _add_common(t)

    return ap


def _cmd_eval(args) -> int:
    if args.points < 1:
        raise DomainError("--points must be at least 1")
    if not (args.x_max >= args.x_min):
        raise DomainError("--x-max must be >= --x-min")
    p = Params(args.mu, args.nu)
    fam = HalfIntFamily(args.mu)
    xs = np.linspace(args.x_min, args.x_max, args.points)
    rows = []
    for x in xs.tolist():
        lam = eval_lambda(p, x)
        cap = eval_capital_lambda(fam, x)
        try:
            lval = eval_modified_L(p, x).value if x > 0.0 else None
        except DegeneratePrefactorError:
            lval = None
        try:
            sval = eval_lommel_S(fam, x).value if x > 0.0 else None
        except DegeneratePrefactorError:
            sval = None
        rows.append((x, lam.value, cap.value, lval, sval,
                     max(lam.error_bound, cap.error_bound)))
    header = ("x", "lambda", "capital_lambda", "modified_l", "lommel_s", "error_bound")
    _emit(header, rows, args.format, args.out)
    if args.plot_dir:
        from . import _plots
        path = _plots.plot_eval(rows, _plot_path(args.plot_dir, "eval.png"))
        print(f"figure: {path}", file=sys.stderr)
    return EXIT_PASS


def _zero_rows(table: ZeroTable) -> list[tuple]:
    return [
        (e.index, e.eta, e.bracket_lo, e.bracket_hi, e.residual, e.multiplicity)
        for e in table.entries
    ]


def _cmd_zeros(args) -> int:
    if args.n_max < 1:
        raise DomainError("--n-max must be at least 1")
    tol = _resolve_tol(args, 1e-10)
    rc = EXIT_PASS
    try:
        table = find_zeros(args.mu, args.n_max, tol)
    except ScanMissError as exc:
        if exc.partial is None:
            raise
        print(f"warning: {exc}", file=sys.stderr)
        table = exc.partial
        rc = EXIT_NUMERICAL
    header = ("n", "eta", "bracket_lo", "bracket_hi", "residual", "multiplicity")
    _emit(header, _zero_rows(table), args.format, args.out)
    if args.plot_dir:
        from . import _plots
        path = _plots.plot_zeros(args.mu, table.entries, _plot_path(args.plot_dir, "zeros.png"))
        print(f"figure: {path}", file=sys.stderr)
    return rc


def _cmd_rayleigh(args) -> int:
    if args.big_m < 1:
        raise DomainError("--big-m must be at least 1")
    tol = _resolve_tol(args, 1e-10)
    fam = HalfIntFamily(args.mu)
    table = find_zeros(args.mu, args.n_max, tol)
    comps = compare_methods(fam, table, args.big_m)
    rows = [(c.m, c.newton_girard, c.zero_sum, c.abs_diff) for c in comps]
    header = ("m", "alpha_ng", "alpha_zeros", "abs_diff")
    _emit(header, rows, args.format, args.out)
    if args.plot_dir:
        from . import _plots
        path = _plots.plot_rayleigh(rows, _plot_path(args.plot_dir, "rayleigh.png"))
        print(f"figure: {path}", file=sys.stderr)
    return EXIT_PASS


def _cmd_table(args) -> int:
    if args.n_max < 1 or args.big_m < 1:
        raise DomainError("--n-max and --big-m must be at least 1")
    tol = _resolve_tol(args, 1e-10)
    fam = HalfIntFamily(args.mu)
    table = find_zeros(args.mu, args.n_max, tol)
    comps = compare_methods(fam, table, args.big_m)
    rows: list[tuple] = []
    for e in table.entries:
        rows.append(("zero", e.index, e.eta, e.residual, e.multiplicity, None, None))
    for c in comps:
        rows.append(("rayleigh", c.m, None, None, None, c.newton_girard, c.zero_sum))
    header = ("section", "index", "eta", "residual", "multiplicity",
              "alpha_ng", "alpha_zeros")
    _emit(header, rows, args.format, args.out)
    if args.plot_dir:
        from . import _plots
        p1 = _plots.plot_zeros(args.mu, table.entries,
                               _plot_path(args.plot_dir, "zeros.png"))
        p2 = _plots.plot_rayleigh(
            [(c.m, c.newton_girard, c.zero_sum, c.abs_diff) for c in comps],
            _plot_path(args.plot_dir, "rayleigh.png"))
        print(f"figure: {p1}", file=sys.stderr)
        print(f"figure: {p2}", file=sys.stderr)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# verify corpus


def _report_row(name: str, rep: CheckReport, *, mu=None, nu=None, mu1=None,
                nu1=None, family_mu=None, a=None, k=None, x=None,
                limit_a=None, limit_b=None) -> tuple:
    g = rep.grid
    return (
        name, mu, nu, mu1, nu1, family_mu, a, k, x,
        g.x_min, g.x_max, g.points, rep.tolerance,
        rep.worst_margin, rep.violations, rep.status,
        limit_a, limit_b, rep.notes,
    )


def _x_grid() -> GridSpec:
    return GridSpec(10.0 / 512.0, 10.0, 512)


def _rows_ratio_increasing(tol: float) -> list[tuple]:
    g = _x_grid()
    rows = []
    for nu in _NU_CORPUS:
        for mu, mu1 in _MU_PAIRS:
            rep = check_ratio_increasing(Params(mu, nu), Params(mu1, nu), g, tol)
            rows.append(_report_row("thm2.1.i", rep, mu=mu, nu=nu, mu1=mu1, nu1=nu))
    # one row moving both parameters at once
    rep = check_ratio_increasing(Params(0.5, 0.0), Params(1.5, 1.0), g, tol)
    rows.append(_report_row("thm2.1.i", rep, mu=0.5, nu=0.0, mu1=1.5, nu1=1.0))
    return rows


def _rows_param_monotone(which: str, tol: float) -> list[tuple]:
    rows = []
    if which == "in_mu":
        g = GridSpec(-0.5, 4.0, 101)
        for nu in _NU_CORPUS:
            for x in (0.5, 2.0):
                rep = check_param_monotone_logconvex(nu, g, x, "in_mu", tol)
                rows.append(_report_row("thm2.1.ii", rep, nu=nu, x=x))
    else:
        g = GridSpec(-2.0, 2.0, 101)
        for mu in _MU_CORPUS:
            rep = check_param_monotone_logconvex(mu, g, 2.0, "in_nu", tol)
            rows.append(_report_row("thm2.1.iii", rep, mu=mu, x=2.0))
    return rows


def _rows_deriv_ratio(parity: str, tol: float) -> list[tuple]:
    name = "thm2.1.iv" if parity == "even" else "thm2.1.v"
    g = _x_grid()
    rows = []
    for mu in _MU_CORPUS:
        for nu in _NU_CORPUS:
            for k in (0, 1):
                rep = check_cosh_sinh_ratio(Params(mu, nu), k, g, parity, tol)
                rows.append(_report_row(name, rep, mu=mu, nu=nu, k=k))
    # hypothesis-violating parameters: the report must come back not_applicable
    bad_nu = 2.3 if parity == "even" else 3.2
    rep = check_cosh_sinh_ratio(Params(-0.5, bad_nu), 0, g, parity, tol)
    rows.append(_report_row(name, rep, mu=-0.5, nu=bad_nu, k=0))
    return rows


def _rows_turan(which: str, tol: float) -> list[tuple]:
    name = "turan.mu" if which == "shift_mu" else "turan.nu"
    g = _x_grid()
    rows = []
    for mu in _MU_CORPUS:
        for nu in _NU_CORPUS:
            for a in (0.25, 0.5):
                rep = check_turan(Params(mu, nu), a, g, which, tol)
                rows.append(_report_row(name, rep, mu=mu, nu=nu, a=a))
    return rows


_FAMILY_TABLES: dict[float, ZeroTable] = {}


def _family_table(mu: float) -> ZeroTable:
    if mu not in _FAMILY_TABLES:
        _FAMILY_TABLES[mu] = find_zeros(mu, 1, 1e-10)
    return _FAMILY_TABLES[mu]


def _sym_grid(eta1: float) -> GridSpec:
    return GridSpec(-0.95 * eta1, 0.95 * eta1, 512)


def _pos_grid(eta1: float) -> GridSpec:
    return GridSpec(eta1 / 512.0, 0.995 * eta1, 512)


def _rows_family(name: str, tol: float) -> list[tuple]:
    rows = []
    for fm in _FAMILY_CORPUS:
        fam = HalfIntFamily(fm)
        table = _family_table(fm)
        eta1 = table.zeros[0]
        if name == "thm3.1":
            rep = check_increasing_family(fam, _x_grid(), tol)
            rows.append(_report_row(name, rep, family_mu=fm))
        elif name == "thm3.2":
            rep = check_logconvex_geomconvex_x(fam, _sym_grid(eta1), tol, eta1=eta1)
            rows.append(_report_row(name, rep, family_mu=fm))
        elif name == "thm3.3":
            res = redheffer_exponent_lambda(fam, table, _pos_grid(eta1), tol)
            rows.append(_report_row(name, res.report, family_mu=fm,
                                    limit_a=res.a, limit_b=res.b))
        elif name == "thm3.4":
            rep = check_product_unimodal(fam, table, _sym_grid(eta1), tol)
            rows.append(_report_row(name, rep, family_mu=fm))
        elif name == "thm3.5":
            rep = check_ratio_logconvex(fam, _sym_grid(eta1), tol)
            rows.append(_report_row(name, rep, family_mu=fm))
        elif name == "thm3.6":
            res = redheffer_exponent_capital(fam, table, _pos_grid(eta1), tol)
            rows.append(_report_row(name, res.report, family_mu=fm,
                                    limit_a=res.lo, limit_b=res.hi))
        else:
            raise DomainError(f"unknown family check {name!r}")
    return rows


_CHECK_BUILDERS: dict[str, Callable[[float], list[tuple]]] = {
    "thm2.1.i": _rows_ratio_increasing,
    "thm2.1.ii": lambda tol: _rows_param_monotone("in_mu", tol),
    "thm2.1.iii": lambda tol: _rows_param_monotone("in_nu", tol),
    "thm2.1.iv": lambda tol: _rows_deriv_ratio("even", tol),
    "thm2.1.v": lambda tol: _rows_deriv_ratio("odd", tol),
    "turan.mu": lambda tol: _rows_turan("shift_mu", tol),
    "turan.nu": lambda tol: _rows_turan("shift_nu", tol),
    "thm3.1": lambda tol: _rows_family("thm3.1", tol),
    "thm3.2": lambda tol: _rows_family("thm3.2", tol),
    "thm3.3": lambda tol: _rows_family("thm3.3", tol),
    "thm3.4": lambda tol: _rows_family("thm3.4", tol),
    "thm3.5": lambda tol: _rows_family("thm3.5", tol),
    "thm3.6": lambda tol: _rows_family("thm3.6", tol),
}


def _cmd_verify(args) -> int:
    tol = _resolve_tol(args, DEFAULT_TOLERANCE)
    if args.check == "all":
        names = CHECK_NAMES
    elif args.check in _CHECK_BUILDERS:
        names = (args.check,)
    else:
        raise DomainError(
            f"unknown check {args.check!r}; choose from "
            + ", ".join(CHECK_NAMES) + ", all"
        )
    rows: list[tuple] = []
    for name in names:
        rows.extend(_CHECK_BUILDERS[name](tol))
    _emit(_VERIFY_HEADER, rows, args.format, args.out)
    if args.plot_dir:
        from . import _plots
        status_col = _VERIFY_HEADER.index("status")
        margin_col = _VERIFY_HEADER.index("worst_margin")
        labeled = [
            (f"{r[0]}#{i}", r[margin_col], r[status_col])
            for i, r in enumerate(rows)
        ]
        path = _plots.plot_verify(labeled, _plot_path(args.plot_dir, "verify.png"))
        print(f"figure: {path}", file=sys.stderr)
    if any(r[_VERIFY_HEADER.index("status")] == "fail" for r in rows):
        return EXIT_FAIL
    return EXIT_PASS


_DISPATCH = {
    "eval": _cmd_eval,
    "zeros": _cmd_zeros,
    "rayleigh": _cmd_rayleigh,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (AdmissibilityError, DegeneratePrefactorError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, BracketingError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    raise SystemExit(main())
