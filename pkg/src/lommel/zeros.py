"""Positive real zeros eta_{mu,n} of the normalized unmodified function.

For 0 < mu < 1 the n-th zero is localized in an explicit interval:

    odd n:   ( (n + mu/2) pi,  (n + mu) pi )
    even n:  (  n pi,          (n + mu/2) pi )

and each interval holds exactly one simple zero.  Outside that parameter
range no localization theorem applies, so find_zeros falls back to a
sign-change scan with step pi/64 plus a detector for even-order touch
points (local minima of |Lambda| that dip below sqrt(tol) of local scale,
confirmed by a sign change of Lambda'); the scan is a heuristic and is
documented as such.  A scan that produces fewer zeros than requested
raises ScanMissError carrying the partial table rather than padding it.

The reciprocal-square-sum identity sum_n 1/eta_{mu,n}^2 = 1/((mu+2)(mu+3))
(zeros counted with multiplicity) is checked by verify_reciprocal_square_sum;
the infinite tail is bracketed through n pi <= eta_n <= (n+mu) pi, with the
model sums evaluated exactly by the trigamma function.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq
from scipy.special import polygamma

from .core import HalfIntFamily, eval_capital_lambda
from .errors import ConvergenceError, DomainError, NoSignChangeError, ScanMissError

_SCAN_STEP = math.pi / 64.0
_BRENTQ_RTOL = 8.9e-16  # just above the scipy minimum of 4 eps


@dataclass(frozen=True)
class BracketInterval:
    """Localization interval for the index-th positive zero (1-based)."""

    lower: float
    upper: float
    index: int


@dataclass(frozen=True)
class ZeroEntry:
    index: int
    eta: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    multiplicity: int


@dataclass(frozen=True)
class ZeroTable:
    """Ordered table of located zeros for one family parameter."""

    mu: float
    tol: float
    entries: tuple[ZeroEntry, ...]

    @property
    def zeros(self) -> tuple[float, ...]:
        return tuple(e.eta for e in self.entries)

    @property
    def n_max(self) -> int:
        return len(self.entries)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(e.multiplicity for e in self.entries)

    def total_count(self) -> int:
        """Number of zeros counted with multiplicity."""
        return sum(e.multiplicity for e in self.entries)


def bracket_intervals(mu: float, n_max: int) -> list[BracketInterval]:
    """The first n_max localization intervals; requires 0 < mu < 1."""
    if not (0.0 < mu < 1.0):
        raise DomainError(
            f"zero localization intervals hold for 0 < mu < 1, got mu={mu}"
        )
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = []
    for n in range(1, n_max + 1):
        if n % 2 == 1:
            out.append(BracketInterval((n + mu / 2.0) * math.pi, (n + mu) * math.pi, n))
        else:
            out.append(BracketInterval(n * math.pi, (n + mu / 2.0) * math.pi, n))
    return out


def _local_scale(fam: HalfIntFamily, lo: float, hi: float) -> float:
    """max |Lambda| over a few samples of [lo, hi]; the yardstick for
    residual tolerances."""
    best = 0.0
    for i in range(5):
        x = lo + (hi - lo) * i / 4.0
        best = max(best, abs(eval_capital_lambda(fam, x).value))
    return max(best, 1e-300)


def _refine_simple(
    fam: HalfIntFamily, lo: float, hi: float, tol: float
) -> tuple[float, float]:
    """Brent refinement of one simple zero inside [lo, hi] -> (eta, residual)."""

    def f(x: float) -> float:
        return eval_capital_lambda(fam, x).value

    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo, 0.0
    if fhi == 0.0:
        return hi, 0.0
    if flo * fhi > 0.0:
        raise NoSignChangeError(
            f"no sign change on [{lo:.6g}, {hi:.6g}] for family mu={fam.mu}"
        )
    eta = brentq(f, lo, hi, xtol=1e-13, rtol=_BRENTQ_RTOL)
    residual = abs(f(eta))
    if residual > tol * _local_scale(fam, lo, hi):
        raise ConvergenceError(
            f"zero refinement residual {residual:.3e} exceeds tolerance "
            f"near x={eta:.6g} (family mu={fam.mu})"
        )
    return eta, residual


def refine_zero(fam: HalfIntFamily, bracket: BracketInterval, tol: float) -> float:
    """Refine the simple zero inside a localization interval.

    Brent iteration (inverse-quadratic/secant acceleration with a guaranteed
    bisection fallback).  Raises NoSignChangeError when the endpoints agree
    in sign, which signals a wrong bracket or an even-order zero.
    """
    eta, _ = _refine_simple(fam, bracket.lower, bracket.upper, tol)
    return eta


def _refine_touch_point(
    fam: HalfIntFamily, lo: float, hi: float, tol: float
) -> tuple[float, float] | None:
    """Confirm and refine an even-order zero candidate inside [lo, hi].

    Requires a sign change of Lambda' across the interval; returns None when
    the candidate does not confirm (it was just a shallow dip).
    """

    def fp(x: float) -> float:
        return eval_capital_lambda(fam, x, deriv=1).value

    glo, ghi = fp(lo), fp(hi)
    if glo * ghi >= 0.0:
        return None
    x_star = brentq(fp, lo, hi, xtol=1e-13, rtol=_BRENTQ_RTOL)
    residual = abs(eval_capital_lambda(fam, x_star).value)
    if residual > tol * _local_scale(fam, lo, hi):
        return None
    return x_star, residual


def find_zeros(mu: float, n_max: int, tol: float = 1e-10) -> ZeroTable:
    """Locate the first n_max positive zeros of Lambda_mu.

    For 0 < mu < 1 every zero comes from its localization interval; other
    admissible mu use the scan heuristic.  Multiplicity is 1 except for
    confirmed touch points, which are recorded with multiplicity 2.
    """
    fam = HalfIntFamily(mu)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max == 0:
        return ZeroTable(mu, tol, ())
    if 0.0 < mu < 1.0:
        entries = []
        for iv in bracket_intervals(mu, n_max):
            eta, residual = _refine_simple(fam, iv.lower, iv.upper, tol)
            entries.append(ZeroEntry(iv.index, eta, iv.lower, iv.upper, residual, 1))
        return ZeroTable(mu, tol, tuple(entries))
    return _find_zeros_scan(fam, n_max, tol)


def _find_zeros_scan(fam: HalfIntFamily, n_max: int, tol: float) -> ZeroTable:
    """Scan-with-refinement for families without localization intervals.

    The first window assumes roughly one zero per pi; families whose
    distinct zeros arrive more sparsely (touch points show up one per
    2 pi) get a doubled window, a few times over, before giving up.
    """
    base = (n_max + 2 + fam.mu) * math.pi
    best: list[tuple[float, float, float, float, int]] = []
    limit = base
    for attempt in range(4):
        limit = base * float(2**attempt)
        best = _scan_window(fam, tol, limit)
        if len(best) >= n_max:
            break
    entries = tuple(
        ZeroEntry(i + 1, eta, lo, hi, res, mult)
        for i, (eta, lo, hi, res, mult) in enumerate(best[:n_max])
    )
    if len(entries) < n_max:
        raise ScanMissError(
            f"scan up to x={limit:.4g} found {len(entries)} zeros, "
            f"needed {n_max} (family mu={fam.mu})",
            partial=ZeroTable(fam.mu, tol, entries),
        )
    return ZeroTable(fam.mu, tol, entries)


def _scan_window(
    fam: HalfIntFamily, tol: float, limit: float
) -> list[tuple[float, float, float, float, int]]:
    n_steps = int(math.ceil(limit / _SCAN_STEP))
    xs = [(i + 1) * _SCAN_STEP for i in range(n_steps)]
    vals = [eval_capital_lambda(fam, x) for x in xs]
    # a value below its own error bound is a zero hit as far as doubles can
    # tell; flatten it so the sign logic cannot chase rounding noise (grid
    # points can land exactly on zeros: step = pi/64 divides 2 pi n)
    fs = [0.0 if abs(v.value) <= v.error_bound else v.value for v in vals]

    found: list[tuple[float, float, float, float, int]] = []  # eta, lo, hi, res, mult
    i = 0
    while i < len(xs):
        if fs[i] == 0.0:
            j = i
            while j + 1 < len(xs) and fs[j + 1] == 0.0:
                j += 1
            if j + 1 >= len(xs):
                break  # run reaches the window edge; a wider window decides
            lo = xs[i] - _SCAN_STEP
            hi = xs[j] + _SCAN_STEP
            left = fs[i - 1] if i > 0 else 1.0  # the function starts at 1
            right = fs[j + 1]
            if left * right > 0.0:
                hit = _refine_touch_point(fam, lo, hi, tol)
                if hit is not None:
                    found.append((hit[0], lo, hi, hit[1], 2))
                else:
                    mid = 0.5 * (xs[i] + xs[j])
                    found.append((mid, lo, hi, abs(vals[i].value), 2))
            else:
                eta, residual = _refine_simple(fam, lo, hi, tol)
                found.append((eta, lo, hi, residual, 1))
            i = j + 1
            continue
        if i + 1 < len(xs) and fs[i] * fs[i + 1] < 0.0:
            eta, residual = _refine_simple(fam, xs[i], xs[i + 1], tol)
            found.append((eta, xs[i], xs[i + 1], residual, 1))
        i += 1
    # touch-point sweep: |Lambda| local minima without a sign change
    for i in range(1, len(xs) - 1):
        a, m, b = fs[i - 1], fs[i], fs[i + 1]
        if m == 0.0 or a * m < 0.0 or m * b < 0.0:
            continue
        if abs(m) < abs(a) and abs(m) < abs(b):
            scale = _local_scale(fam, xs[i - 1], xs[i + 1])
            if abs(m) < math.sqrt(tol) * scale:
                hit = _refine_touch_point(fam, xs[i - 1], xs[i + 1], tol)
                if hit is not None:
                    found.append((hit[0], xs[i - 1], xs[i + 1], hit[1], 2))
    found.sort(key=lambda t: t[0])
    # drop duplicates picked up by adjacent scan cells
    dedup: list[tuple[float, float, float, float, int]] = []
    for item in found:
        if dedup and abs(item[0] - dedup[-1][0]) < _SCAN_STEP / 2.0:
            continue
        dedup.append(item)
    return dedup


@dataclass(frozen=True)
class ReciprocalSumReport:
    """Partial reciprocal-square sum against its closed-form target."""

    mu: float
    n_terms: int  # zeros used, counted with multiplicity
    partial_sum: float
    tail_estimate: float
    tail_lo: float
    tail_hi: float
    target: float
    error: float
    bracket_width: float
    ok: bool


def _model_tail(n_from: int, offset: float, power: int) -> float:
    """sum_{n > n_from} ((n + offset) pi)^(-2 power), exact via polygamma."""
    k = 2 * power - 1
    return float(polygamma(k, n_from + 1 + offset)) / (
        math.factorial(k) * math.pi ** (2 * power)
    )


def tail_bracket(mu: float, n_from: int, power: int = 1) -> tuple[float, float, float]:
    """(estimate, lo, hi) for the tail sum_{n > n_from} eta_n^(-2 power).

    Uses n pi <= eta_n <= (n + mu) pi with offset mu/2 as the point
    estimate; a valid lower bound on the zeros gives a valid upper bound
    on the tail and vice versa.
    """
    est = _model_tail(n_from, mu / 2.0, power)
    lo = _model_tail(n_from, mu, power)
    hi = _model_tail(n_from, 0.0, power)
    return est, lo, hi


def reciprocal_square_sum_report(
    table: ZeroTable, tail_n: int | None = None
) -> ReciprocalSumReport:
    """Full accounting of the reciprocal-square-sum identity check.

    tail_n is the first index covered by the model tail; it defaults to one
    past the zeros actually held (counted with multiplicity).
    """
    mu = table.mu
    if tail_n is None:
        tail_n = table.total_count() + 1
    if tail_n < 1:
        raise ValueError("tail_n must be a positive integer")
    target = 1.0 / ((mu + 2.0) * (mu + 3.0))
    partial = math.fsum(e.multiplicity / (e.eta * e.eta) for e in table.entries)
    est, lo, hi = tail_bracket(mu, tail_n - 1, power=1)
    error = abs(partial + est - target)
    width = hi - lo
    return ReciprocalSumReport(
        mu=mu,
        n_terms=table.total_count(),
        partial_sum=partial,
        tail_estimate=est,
        tail_lo=lo,
        tail_hi=hi,
        target=target,
        error=error,
        bracket_width=width,
        ok=error <= 2.0 * width,
    )


def verify_reciprocal_square_sum(table: ZeroTable, tail_n: int | None = None) -> float:
    """|partial sum + tail estimate - 1/((mu+2)(mu+3))|, tail-completed.

    The contract is error <= 2 * (tail bracket width); the full breakdown is
    available from reciprocal_square_sum_report.
    """
    return reciprocal_square_sum_report(table, tail_n).error
