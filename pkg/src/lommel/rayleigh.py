"""Rayleigh-type power sums alpha^(2m) = sum_n eta_{mu,n}^(-2m).

Two independent routes to the same numbers:

  * Newton-Girard on the series coefficients of the unmodified function
    (counts zeros with multiplicity automatically, needs no zero values);
  * direct summation over a located zero table plus a bracketed model tail.

Their agreement within the tail bracket width is the main cross-check that
no zero was missed or double-counted.  The sums also drive the truncated
Hadamard product evaluator (product_eval) through its exponential tail
correction, and the logarithmic derivative identity
lambda'(x)/(x lambda(x)) = sum_n 2/(eta_n^2 + x^2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ._compensated import KahanSum
from .core import HalfIntFamily, eval_lambda
from .zeros import ZeroTable, tail_bracket


@dataclass(frozen=True)
class RayleighTable:
    """Power sums alpha^(2m) for m = 1..m_max, by one method."""

    mu: float
    sums: tuple[float, ...]
    method: str  # "newton_girard" or "zero_sum"
    m_max: int

    def alpha(self, m: int) -> float:
        """alpha^(2m); m is 1-based."""
        return self.sums[m - 1]


def lambda_coefficients(fam: HalfIntFamily, m_max: int) -> list[float]:
    """Signed series coefficients c_0..c_{m_max} of the unmodified function
    in powers of x^2; flipping the signs of the odd entries gives the
    modified partner's coefficients."""
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    coeffs = [1.0]
    for m in range(1, m_max + 1):
        coeffs.append(-coeffs[-1] / (4.0 * (fam.a + m - 1) * (fam.b + m - 1)))
    return coeffs


def rayleigh_newton_girard(fam: HalfIntFamily, m_max: int) -> RayleighTable:
    """alpha^(2m) for m = 1..m_max from the series coefficients alone.

    Newton-Girard in the x^2 variable: p_m = -m c_m - sum_{j<m} c_{m-j} p_j.
    Counts zeros with multiplicity.  The inner sum is compensated so the
    recursion stays clean out to m ~ 20.
    """
    if m_max < 1:
        raise ValueError("m_max must be positive")
    c = lambda_coefficients(fam, m_max)
    p = [0.0] * (m_max + 1)
    for m in range(1, m_max + 1):
        acc = KahanSum()
        acc.add(-m * c[m])
        for j in range(1, m):
            acc.add(-c[m - j] * p[j])
        p[m] = acc.value
    return RayleighTable(fam.mu, tuple(p[1:]), "newton_girard", m_max)


@dataclass(frozen=True)
class ZeroSumEstimate:
    """Zero-table route to one alpha^(2m), with its tail accounting."""

    m: int
    value: float  # partial + tail_estimate
    width: float  # tail_hi - tail_lo, the bracketing uncertainty
    partial: float
    tail_estimate: float
    tail_lo: float
    tail_hi: float


def _multiplicities(table: ZeroTable, override: Sequence[int] | None) -> list[int]:
    if override is None:
        return [e.multiplicity for e in table.entries]
    if len(override) != len(table.entries):
        raise ValueError("multiplicity list length must match the zero table")
    return list(override)


def rayleigh_from_zeros(
    table: ZeroTable, m: int, multiplicities: Sequence[int] | None = None
) -> ZeroSumEstimate:
    """alpha^(2m) from located zeros plus a bracketed model tail.

    Multiplicities default to the table's own; an explicit list overrides
    them.  The tail covers the indices past the zeros held (counted with
    multiplicity) and its bracket width is the honest uncertainty.
    """
    if m < 1:
        raise ValueError("m must be positive")
    mults = _multiplicities(table, multiplicities)
    partial = math.fsum(
        k / e.eta ** (2 * m) for e, k in zip(table.entries, mults)
    )
    n_eff = sum(mults)
    est, lo, hi = tail_bracket(table.mu, n_eff, power=m)
    return ZeroSumEstimate(
        m=m,
        value=partial + est,
        width=hi - lo,
        partial=partial,
        tail_estimate=est,
        tail_lo=lo,
        tail_hi=hi,
    )


def rayleigh_table_from_zeros(
    table: ZeroTable, m_max: int, multiplicities: Sequence[int] | None = None
) -> RayleighTable:
    """Zero-sum route packaged like the Newton-Girard table."""
    sums = tuple(
        rayleigh_from_zeros(table, m, multiplicities).value
        for m in range(1, m_max + 1)
    )
    return RayleighTable(table.mu, sums, "zero_sum", m_max)


@dataclass(frozen=True)
class RayleighComparison:
    """One row of the cross-method check."""

    m: int
    newton_girard: float
    zero_sum: float
    abs_diff: float
    tail_width: float
    ok: bool


def compare_methods(
    fam: HalfIntFamily, table: ZeroTable, m_max: int
) -> tuple[RayleighComparison, ...]:
    """Both routes side by side; ok when they agree within the tail width."""
    ng = rayleigh_newton_girard(fam, m_max)
    rows = []
    for m in range(1, m_max + 1):
        zs = rayleigh_from_zeros(table, m)
        diff = abs(ng.alpha(m) - zs.value)
        rows.append(
            RayleighComparison(m, ng.alpha(m), zs.value, diff, zs.width, diff <= zs.width)
        )
    return tuple(rows)


def product_eval(
    fam: HalfIntFamily,
    x: float,
    table: ZeroTable,
    modified: bool,
    second_order: bool = False,
    multiplicities: Sequence[int] | None = None,
) -> float:
    """Truncated Hadamard product with an exponential tail correction.

    modified=True approximates the modified partner lambda_{mu-1/2,1/2}
    through prod (1 + x^2/eta_n^2); modified=False approximates the
    unmodified function through prod (1 - x^2/eta_n^2).  The omitted factors
    contribute sum_{n>N} log(1 +- x^2/eta_n^2) = +-x^2 t_1 - x^4 t_2/2 -+ ...
    with t_m = alpha^(2m) - (partial power sum); the first-order term is
    always applied and second_order=True adds the x^4 one.
    """
    mults = _multiplicities(table, multiplicities)
    x2 = x * x
    prod = 1.0
    for e, k in zip(table.entries, mults):
        factor = 1.0 + x2 / (e.eta * e.eta) if modified else 1.0 - x2 / (e.eta * e.eta)
        prod *= factor ** k
    ng = rayleigh_newton_girard(fam, 2 if second_order else 1)
    partial1 = math.fsum(k / e.eta ** 2 for e, k in zip(table.entries, mults))
    t1 = ng.alpha(1) - partial1
    log_corr = x2 * t1 if modified else -x2 * t1
    if second_order:
        partial2 = math.fsum(k / e.eta ** 4 for e, k in zip(table.entries, mults))
        t2 = ng.alpha(2) - partial2
        log_corr -= x2 * x2 * t2 / 2.0
    return prod * math.exp(log_corr)


def log_derivative_lambda(fam: HalfIntFamily, x: float) -> float:
    """lambda'(x)/(x lambda(x)) for the modified partner of the family.

    Equals sum_n 2/(eta_n^2 + x^2); the x -> 0 limit is 2/((mu+2)(mu+3)).
    """
    if x == 0.0:
        return 2.0 / ((fam.mu + 2.0) * (fam.mu + 3.0))
    p = fam.as_params()
    lam0 = eval_lambda(p, x).value
    lam1 = eval_lambda(p, x, deriv=1).value
    return lam1 / (x * lam0)
