"""Grid certification of monotonicity, convexity, Turan, and Redheffer claims.

Every check follows the same contract: the parameter hypothesis is tested
first and a failing hypothesis yields status "not_applicable" (never a pass,
never a silent skip); otherwise the claim is reduced to signed margins on an
explicit grid.  Margins are first or second finite differences scaled by
max(1, local magnitude), so one tolerance works across functions of very
different size.  A weak claim tolerates margins down to -tolerance; a strict
claim requires margins above a small positive floor away from degenerate
points.

Continuum statements are certified only on the grid; this is a numerical
audit, not a proof.  Endpoint limits (the sharp Redheffer exponents) are
never read off at the singular points: the x -> 0 exponents come from
Richardson extrapolation on x = 2^-j and the x -> eta_1 exponents from
secant slopes of the defining ratio, extrapolated in the same way.

The two Redheffer certifiers also report where the computed sharp exponents
disagree with the stated constants: the upper lambda exponent comes out
eta_1^2/(2(mu+2)(mu+3)), a factor 4 below the stated value, and the
unmodified sandwich needs exponents (eta_1^2 alpha^(2), 1) rather than the
stated (0, same b); both findings are exposed as result fields so reports
and tests can assert them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import (
    HalfIntFamily,
    Params,
    capital_lambda_grid,
    capital_lambda_minus_one,
    eval_capital_lambda,
    eval_lambda,
    lambda_grid,
    lambda_minus_one,
)
from .errors import AdmissibilityError, DomainError
from .rayleigh import rayleigh_newton_girard
from .zeros import ZeroTable, find_zeros

DEFAULT_TOLERANCE = 1e-9
STRICT_TOLERANCE = 1e-12

_PARAM = tuple[tuple[str, float], ...]


@dataclass(frozen=True)
class GridSpec:
    """An evaluation grid: endpoints, point count, spacing rule."""

    x_min: float
    x_max: float
    points: int
    spacing: str = "uniform"

    def __post_init__(self) -> None:
        if not (self.x_min < self.x_max):
            raise ValueError("x_min must be below x_max")
        if self.points < 3:
            raise ValueError("a grid needs at least 3 points")
        if self.spacing not in ("uniform", "chebyshev"):
            raise ValueError(f"unknown spacing {self.spacing!r}")

    def values(self) -> np.ndarray:
        if self.spacing == "uniform":
            return np.linspace(self.x_min, self.x_max, self.points)
        mid = 0.5 * (self.x_min + self.x_max)
        half = 0.5 * (self.x_max - self.x_min)
        k = np.arange(self.points)
        return mid - half * np.cos((2 * k + 1) * math.pi / (2 * self.points))


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one certification over a grid."""

    check_name: str
    params: _PARAM
    grid: GridSpec | None
    tolerance: float
    worst_margin: float
    violations: int
    status: str  # "pass" | "fail" | "not_applicable"
    notes: str = ""


def _resolve_tol(tolerance: float | None) -> float:
    tol = DEFAULT_TOLERANCE if tolerance is None else float(tolerance)
    if tol <= 0.0:
        raise ValueError("tolerance must be positive")
    return tol


def _not_applicable(
    name: str, params: _PARAM, grid: GridSpec | None, tol: float, notes: str
) -> CheckReport:
    return CheckReport(name, params, grid, tol, math.nan, 0, "not_applicable", notes)


def _finish(
    name: str,
    params: _PARAM,
    grid: GridSpec | None,
    tol: float,
    margins: np.ndarray,
    strict: bool,
    notes: str = "",
) -> CheckReport:
    """Assemble a pass/fail report from signed margins.

    Weak claims fail below -tol; strict claims fail at or below the
    strictness floor."""
    if margins.size == 0:
        return _not_applicable(name, params, grid, tol, "no grid points in domain")
    worst = float(np.min(margins))
    if strict:
        violations = int(np.sum(margins <= STRICT_TOLERANCE))
    else:
        violations = int(np.sum(margins < -tol))
    status = "pass" if violations == 0 else "fail"
    return CheckReport(name, params, grid, tol, worst, violations, status, notes)


def _diff_margins(values: np.ndarray, sense: str) -> np.ndarray:
    """First-difference margins, positive when the claimed direction holds."""
    v = np.asarray(values, dtype=float)
    if v.size < 2:
        return np.empty(0)
    d = v[1:] - v[:-1]
    scale = np.maximum(1.0, np.maximum(np.abs(v[1:]), np.abs(v[:-1])))
    return d / scale if sense == "increasing" else -d / scale


def _convexity_margins(values: np.ndarray) -> np.ndarray:
    """Second-difference margins, positive where discretely convex."""
    v = np.asarray(values, dtype=float)
    if v.size < 3:
        return np.empty(0)
    s = v[:-2] - 2.0 * v[1:-1] + v[2:]
    scale = np.maximum(
        1.0, np.maximum(np.abs(v[:-2]), np.maximum(np.abs(v[1:-1]), np.abs(v[2:])))
    )
    return s / scale


def _positive_grid(g: GridSpec) -> np.ndarray:
    if g.x_min <= 0.0:
        raise DomainError("this check needs a grid inside (0, inf)")
    return g.values()


def check_ratio_increasing(
    p: Params, p1: Params, g: GridSpec, tolerance: float | None = None
) -> CheckReport:
    """Ratio of the two normalized modified functions increasing on (0, inf).

    Hypothesis: mu1 >= mu, (mu1-mu)(mu1+mu+6) >= nu1^2 - nu^2, and both
    series have positive coefficients (mu +- nu + 3 > 0 on both pairs, which
    the coefficient-ratio argument needs).
    """
    tol = _resolve_tol(tolerance)
    params = (("mu", p.mu), ("nu", p.nu), ("mu1", p1.mu), ("nu1", p1.nu))
    name = "ratio_increasing"
    if p1.mu < p.mu:
        return _not_applicable(name, params, g, tol, "mu1 < mu")
    if (p1.mu - p.mu) * (p1.mu + p.mu + 6.0) < p1.nu**2 - p.nu**2:
        return _not_applicable(
            name, params, g, tol, "(mu1-mu)(mu1+mu+6) < nu1^2-nu^2"
        )
    for q in (p, p1):
        if not (q.mu - q.nu + 3.0 > 0.0 and q.mu + q.nu + 3.0 > 0.0):
            return _not_applicable(
                name, params, g, tol, "mu +- nu + 3 > 0 fails (coefficients not positive)"
            )
    xs = _positive_grid(g)
    ratio = lambda_grid(p, xs) / lambda_grid(p1, xs)
    return _finish(name, params, g, tol, _diff_margins(ratio, "increasing"), False)


def check_param_monotone_logconvex(
    fixed: float,
    param_grid: GridSpec,
    x: float,
    which: str,
    tolerance: float | None = None,
) -> CheckReport:
    """Behavior of lambda along a parameter grid at a fixed argument.

    which="in_mu": fixed is nu, the grid spans mu; asserts lambda decreasing
    and log lambda convex in mu.  which="in_nu": fixed is mu, the grid spans
    nu; asserts log-convexity only.  Hypothesis mu +- nu + 3 > 0 along the
    grid.
    """
    tol = _resolve_tol(tolerance)
    if which not in ("in_mu", "in_nu"):
        raise ValueError(f"unknown variant {which!r}")
    ts = param_grid.values()
    name = f"param_{which}"
    if which == "in_mu":
        params: _PARAM = (("nu", fixed), ("x", x))
        pairs = [(float(t), fixed) for t in ts]
    else:
        params = (("mu", fixed), ("x", x))
        pairs = [(fixed, float(t)) for t in ts]
    for mu, nu in pairs:
        if not (mu - nu + 3.0 > 0.0 and mu + nu + 3.0 > 0.0):
            return _not_applicable(
                name, params, param_grid, tol, f"mu +- nu + 3 > 0 fails at ({mu}, {nu})"
            )
    try:
        vals = np.array([eval_lambda(Params(mu, nu), x).value for mu, nu in pairs])
    except AdmissibilityError as exc:
        return _not_applicable(name, params, param_grid, tol, str(exc))
    log_vals = np.log(vals)
    margins = _convexity_margins(log_vals)
    if which == "in_mu":
        margins = np.concatenate([_diff_margins(vals, "decreasing"), margins])
    return _finish(name, params, param_grid, tol, margins, False)


def check_turan(
    p: Params, a: float, g: GridSpec, which: str, tolerance: float | None = None
) -> CheckReport:
    """Reverse Turan inequality lambda^2 <= lambda_+ lambda_- on the grid.

    which="shift_mu" shifts mu by +-a, which="shift_nu" shifts nu.  The
    inequality follows from parameter log-convexity, so the hypothesis is
    admissibility of the shifted pairs plus mu +- nu + 3 > 0 at them.
    """
    tol = _resolve_tol(tolerance)
    if which not in ("shift_mu", "shift_nu"):
        raise ValueError(f"unknown variant {which!r}")
    params = (("mu", p.mu), ("nu", p.nu), ("a", a))
    name = f"turan_{which}"
    try:
        if which == "shift_mu":
            plus, minus = Params(p.mu + a, p.nu), Params(p.mu - a, p.nu)
        else:
            plus, minus = Params(p.mu, p.nu + a), Params(p.mu, p.nu - a)
    except AdmissibilityError as exc:
        return _not_applicable(name, params, g, tol, str(exc))
    for q in (plus, minus):
        if not (q.mu - q.nu + 3.0 > 0.0 and q.mu + q.nu + 3.0 > 0.0):
            return _not_applicable(
                name, params, g, tol, "mu +- nu + 3 > 0 fails at a shifted pair"
            )
    xs = g.values()
    lam = lambda_grid(p, xs)
    prod = lambda_grid(plus, xs) * lambda_grid(minus, xs)
    scale = np.maximum(1.0, np.maximum(np.abs(prod), lam * lam))
    margins = (prod - lam * lam) / scale
    return _finish(name, params, g, tol, margins, False)


def check_cosh_sinh_ratio(
    p: Params, k: int, g: GridSpec, parity: str, tolerance: float | None = None
) -> CheckReport:
    """Even derivatives against cosh, odd against sinh: strictly decreasing.

    parity="even": lambda^(2k)/cosh under (mu-nu+3)(mu+nu+3) > 2;
    parity="odd": lambda^(2k+1)/sinh on (0, inf) under
    (mu-nu+5)(mu+nu+5) > 12.
    """
    tol = _resolve_tol(tolerance)
    if k < 0:
        raise ValueError("derivative index k must be nonnegative")
    if parity not in ("even", "odd"):
        raise ValueError(f"unknown parity {parity!r}")
    params = (("mu", p.mu), ("nu", p.nu), ("k", k))
    name = f"deriv_ratio_{parity}"
    if parity == "even":
        if (p.mu - p.nu + 3.0) * (p.mu + p.nu + 3.0) <= 2.0:
            return _not_applicable(
                name, params, g, tol, "(mu-nu+3)(mu+nu+3) > 2 fails"
            )
        xs = g.values()
        vals = lambda_grid(p, xs, deriv=2 * k) / np.cosh(xs)
    else:
        if (p.mu - p.nu + 5.0) * (p.mu + p.nu + 5.0) <= 12.0:
            return _not_applicable(
                name, params, g, tol, "(mu-nu+5)(mu+nu+5) > 12 fails"
            )
        xs = _positive_grid(g)
        vals = lambda_grid(p, xs, deriv=2 * k + 1) / np.sinh(xs)
    return _finish(name, params, g, tol, _diff_margins(vals, "decreasing"), True)


def check_increasing_family(
    fam: HalfIntFamily, g: GridSpec, tolerance: float | None = None
) -> CheckReport:
    """The modified partner lambda_{mu-1/2,1/2} increasing on (0, inf).

    Certified twice over: first differences of the values, and positivity of
    the logarithmic derivative lambda'/(x lambda) at every grid point.
    """
    tol = _resolve_tol(tolerance)
    params = (("family_mu", fam.mu),)
    xs = _positive_grid(g)
    p = fam.as_params()
    lam = lambda_grid(p, xs)
    lam1 = lambda_grid(p, xs, deriv=1)
    margins = np.concatenate(
        [_diff_margins(lam, "increasing"), lam1 / (xs * lam)]
    )
    return _finish("increasing_family", params, g, tol, margins, False)


def check_logconvex_geomconvex_x(
    fam: HalfIntFamily,
    g: GridSpec,
    tolerance: float | None = None,
    eta1: float | None = None,
) -> CheckReport:
    """Strict log-convexity on I_mu and strict geometric convexity on (0, inf)
    of the modified partner.

    The grid is filtered to each claim's domain: |x| < eta_1 for the second
    differences of log lambda, x > 0 for the monotonicity of x lambda'/lambda.
    """
    tol = _resolve_tol(tolerance)
    params = (("family_mu", fam.mu),)
    if eta1 is None:
        eta1 = find_zeros(fam.mu, 1).entries[0].eta
    xs = g.values()
    p = fam.as_params()
    xs_log = xs[np.abs(xs) <= 0.995 * eta1]
    margins_log = (
        _convexity_margins(np.log(lambda_grid(p, xs_log)))
        if xs_log.size >= 3
        else np.empty(0)
    )
    xs_pos = xs[xs > 0.0]
    if xs_pos.size >= 2:
        t = xs_pos * lambda_grid(p, xs_pos, deriv=1) / lambda_grid(p, xs_pos)
        margins_geom = _diff_margins(t, "increasing")
    else:
        margins_geom = np.empty(0)
    margins = np.concatenate([margins_log, margins_geom])
    notes = f"log-convexity on {xs_log.size} points, geometric on {xs_pos.size}"
    return _finish(
        "logconvex_geomconvex", params, g, tol, margins, True, notes
    )


def check_product_unimodal(
    fam: HalfIntFamily, t: ZeroTable, g: GridSpec, tolerance: float | None = None
) -> CheckReport:
    """lambda * Lambda increasing on (-eta_1, 0], decreasing on [0, eta_1),
    with its maximum value 1 at the origin."""
    tol = _resolve_tol(tolerance)
    params = (("family_mu", fam.mu),)
    if not t.entries:
        raise ValueError("the zero table must hold at least the first zero")
    eta1 = t.entries[0].eta
    xs = g.values()
    if float(np.max(np.abs(xs))) >= eta1:
        raise DomainError("grid escapes I_mu = (-eta_1, eta_1)")
    prod = lambda_grid(fam.as_params(), xs) * capital_lambda_grid(fam, xs)
    d = prod[1:] - prod[:-1]
    scale = np.maximum(1.0, np.maximum(np.abs(prod[1:]), np.abs(prod[:-1])))
    rising = d / scale
    lo_side = xs[1:] <= 0.0  # pair lies in the increasing half
    hi_side = xs[:-1] >= 0.0  # pair lies in the decreasing half
    margins = np.concatenate(
        [rising[lo_side], -rising[hi_side], 1.0 - prod]
    )
    return _finish("product_unimodal", params, g, tol, margins, False)


def check_ratio_logconvex(
    fam: HalfIntFamily, g: GridSpec, tolerance: float | None = None
) -> CheckReport:
    """lambda / Lambda strictly log-convex on I_mu.

    Raises DomainError when the grid escapes I_mu (detected through a
    nonpositive denominator value).
    """
    tol = _resolve_tol(tolerance)
    params = (("family_mu", fam.mu),)
    xs = g.values()
    lam = lambda_grid(fam.as_params(), xs)
    cap = capital_lambda_grid(fam, xs)
    if bool(np.any(cap <= 0.0)):
        raise DomainError(
            "the unmodified function is nonpositive on the grid; I_mu exceeded"
        )
    vals = np.log(lam) - np.log(cap)
    return _finish(
        "ratio_logconvex", params, g, tol, _convexity_margins(vals), True
    )


def richardson_zero(
    fn: Callable[[float], float], j_lo: int = 4, j_hi: int = 12
) -> float:
    """Limit of fn(x) as x -> 0+ along x = 2^-j, full Richardson table.

    Assumes an even error expansion (the ratios here are even functions), so
    each level cancels a factor-4 error term.
    """
    vals = [fn(2.0 ** (-j)) for j in range(j_lo, j_hi + 1)]
    level = 1
    while len(vals) > 1:
        f = 4.0**level
        vals = [(f * vals[i + 1] - vals[i]) / (f - 1.0) for i in range(len(vals) - 1)]
        level += 1
    return vals[0]


def secant_limit_at_eta(
    p_fn: Callable[[float], float],
    q_fn: Callable[[float], float],
    eta1: float,
    j_lo: int = 8,
    j_hi: int = 17,
) -> float:
    """Limit of p/q as x -> eta_1^- for ratios whose endpoint value is set by
    the slopes (Cauchy mean value: secant slope ratios converge to p'/q').

    Samples x_j = (1 - 2^-j) eta_1, forms secant slopes between consecutive
    samples, and removes the leading 2^-j and 4^-j error terms.
    """
    xs = [(1.0 - 2.0 ** (-j)) * eta1 for j in range(j_lo, j_hi + 1)]
    ps = [p_fn(x) for x in xs]
    qs = [q_fn(x) for x in xs]
    s = [
        (ps[i + 1] - ps[i]) / (qs[i + 1] - qs[i]) for i in range(len(xs) - 1)
    ]
    s1 = [2.0 * s[i + 1] - s[i] for i in range(len(s) - 1)]
    s2 = [(4.0 * s1[i + 1] - s1[i]) / 3.0 for i in range(len(s1) - 1)]
    return s2[-1]


@dataclass(frozen=True)
class RedhefferLambdaResult:
    """Sharp-exponent audit for the modified-function sandwich."""

    report: CheckReport
    a: float  # extrapolated exponent at x -> eta_1 (expected 0)
    b: float  # extrapolated exponent at x -> 0
    b_proof: float  # eta_1^2 / (2 (mu+2)(mu+3))
    b_statement: float  # 2 eta_1^2 / ((mu+2)(mu+3))
    a_ok: bool
    b_ok: bool
    statement_matches: bool  # whether the stated constant survives the audit


@dataclass(frozen=True)
class RedhefferCapitalResult:
    """Sharp-exponent audit for the unmodified-function sandwich."""

    report: CheckReport
    lo: float  # extrapolated exponent at x -> eta_1
    hi: float  # extrapolated exponent at x -> 0
    expected_lo: float  # multiplicity of eta_1
    hi_formula: float  # eta_1^2 alpha^(2)
    lo_ok: bool
    hi_ok: bool
    statement_consistent: bool  # stated exponents (0, b) vs computed limits


_LIMIT_TOL = 1e-6
_ETA_SIDE_TOL = 1e-4  # endpoint extrapolation is the softer of the two


def redheffer_exponent_lambda(
    fam: HalfIntFamily,
    t: ZeroTable,
    g: GridSpec,
    tolerance: float | None = None,
) -> RedhefferLambdaResult:
    """Certify the exponential sandwich for the modified partner on (0, eta_1).

    g_mu(x) = log lambda / [log(eta_1^2+x^2) - log(eta_1^2-x^2)] must be
    decreasing; its limits are the sharp exponents.  The grid margins cover
    the monotonicity and both sandwich sides with the proof-side exponent;
    the limit audit is folded into the violation count.
    """
    tol = _resolve_tol(tolerance)
    if not t.entries:
        raise ValueError("the zero table must hold at least the first zero")
    eta1 = t.entries[0].eta
    e2 = eta1 * eta1
    params = (("family_mu", fam.mu),)
    p = fam.as_params()
    xs = _positive_grid(g)
    if float(np.max(xs)) >= eta1:
        raise DomainError("grid escapes (0, eta_1)")

    def p_fn(x: float) -> float:
        return math.log1p(lambda_minus_one(p, x))

    def q_fn(x: float) -> float:
        r = x * x / e2
        return math.log1p(r) - math.log1p(-r)

    pv = np.array([p_fn(float(x)) for x in xs])
    qv = np.array([q_fn(float(x)) for x in xs])
    gv = pv / qv
    margins = [_diff_margins(gv, "decreasing")]

    b_proof = e2 / (2.0 * (fam.mu + 2.0) * (fam.mu + 3.0))
    b_statement = 4.0 * b_proof
    lam = np.exp(pv)
    upper = np.exp(b_proof * qv)
    scale = np.maximum(1.0, np.maximum(lam, upper))
    margins.append((upper - lam) / scale)  # lambda <= base^b
    margins.append((lam - 1.0) / np.maximum(1.0, lam))  # base^0 = 1 <= lambda

    b_emp = richardson_zero(lambda x: p_fn(x) / q_fn(x))
    a_emp = secant_limit_at_eta(p_fn, q_fn, eta1)
    a_ok = abs(a_emp) <= _ETA_SIDE_TOL
    b_ok = abs(b_emp - b_proof) <= _LIMIT_TOL * max(1.0, abs(b_proof))
    statement_matches = abs(b_emp - b_statement) <= _LIMIT_TOL * max(
        1.0, abs(b_statement)
    )

    report = _finish(
        "redheffer_lambda", params, g, tol, np.concatenate(margins), False,
        notes=f"a={a_emp:.3e} b={b_emp:.9g} b_proof={b_proof:.9g}",
    )
    if report.status == "pass" and not (a_ok and b_ok):
        report = CheckReport(
            report.check_name, report.params, report.grid, report.tolerance,
            report.worst_margin, report.violations + (not a_ok) + (not b_ok),
            "fail", report.notes + " (limit audit failed)",
        )
    return RedhefferLambdaResult(
        report, a_emp, b_emp, b_proof, b_statement, a_ok, b_ok, statement_matches
    )


def redheffer_exponent_capital(
    fam: HalfIntFamily,
    t: ZeroTable,
    g: GridSpec,
    tolerance: float | None = None,
) -> RedhefferCapitalResult:
    """Certify the exponential sandwich for the unmodified function.

    phi_mu(x) = log Lambda / log(1 - x^2/eta_1^2) must be decreasing; its
    x -> 0 limit is eta_1^2 alpha^(2) and its x -> eta_1 limit is the
    multiplicity of eta_1 (1 for a simple first zero).  The certified
    sandwich uses the proof-consistent exponents (eta_1^2 alpha^(2), 1); the
    stated exponents (0 and the part-3 b) are audited and flagged.
    """
    tol = _resolve_tol(tolerance)
    if not t.entries:
        raise ValueError("the zero table must hold at least the first zero")
    eta1 = t.entries[0].eta
    mult1 = t.entries[0].multiplicity
    e2 = eta1 * eta1
    params = (("family_mu", fam.mu),)
    xs = _positive_grid(g)
    if float(np.max(xs)) >= eta1:
        raise DomainError("grid escapes (0, eta_1)")

    def p_fn(x: float) -> float:
        # near 1 the minus-one series keeps full relative accuracy; near the
        # zero the direct value does (re-adding 1 would round it away)
        m = capital_lambda_minus_one(fam, x)
        if m > -0.5:
            return math.log1p(m)
        return math.log(eval_capital_lambda(fam, x).value)

    def q_fn(x: float) -> float:
        return math.log1p(-x * x / e2)

    pv = np.array([p_fn(float(x)) for x in xs])
    qv = np.array([q_fn(float(x)) for x in xs])
    phi = pv / qv
    margins = [_diff_margins(phi, "decreasing")]

    hi_formula = e2 * rayleigh_newton_girard(fam, 1).alpha(1)
    cap = np.exp(pv)
    lower = np.exp(hi_formula * qv)  # base^(eta_1^2 alpha^(2))
    upper = np.exp(qv)  # base^1
    scale = np.maximum(1.0, cap)
    margins.append((cap - lower) / scale)
    margins.append((upper - cap) / scale)

    hi_emp = richardson_zero(lambda x: p_fn(x) / q_fn(x))
    lo_emp = secant_limit_at_eta(p_fn, q_fn, eta1)
    expected_lo = float(mult1)
    hi_ok = abs(hi_emp - hi_formula) <= _LIMIT_TOL * max(1.0, abs(hi_formula))
    lo_tol = _LIMIT_TOL if mult1 == 1 else _ETA_SIDE_TOL
    lo_ok = abs(lo_emp - expected_lo) <= lo_tol * max(1.0, expected_lo)

    b_statement = 2.0 * e2 / ((fam.mu + 2.0) * (fam.mu + 3.0))
    statement_consistent = (
        abs(lo_emp - 0.0) <= _LIMIT_TOL
        and abs(hi_emp - b_statement) <= _LIMIT_TOL * max(1.0, b_statement)
    )

    report = _finish(
        "redheffer_capital", params, g, tol, np.concatenate(margins), False,
        notes=f"lo={lo_emp:.9g} hi={hi_emp:.9g} hi_formula={hi_formula:.9g}",
    )
    if report.status == "pass" and not (lo_ok and hi_ok):
        report = CheckReport(
            report.check_name, report.params, report.grid, report.tolerance,
            report.worst_margin, report.violations + (not lo_ok) + (not hi_ok),
            "fail", report.notes + " (limit audit failed)",
        )
    return RedhefferCapitalResult(
        report, lo_emp, hi_emp, expected_lo, hi_formula, lo_ok, hi_ok,
        statement_consistent,
    )
