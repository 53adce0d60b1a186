"""Series evaluation for Lommel and modified Lommel functions.

Everything here is built on one hypergeometric-style even power series.  With
A = (mu - nu + 3)/2 and B = (mu + nu + 3)/2, the normalized modified function
is

    lambda_{mu,nu}(x) = sum_{n>=0} x^(2n) / ((A)_n (B)_n 4^n),

an entire, even function with lambda(0) = 1.  The unnormalized modified
function is L_{mu,nu}(x) = x^(mu+1) lambda_{mu,nu}(x) / ((mu-nu+1)(mu+nu+1)).

The half-integer-order family is parametrized by a single real mu > -1: the
normalized unmodified function

    Lambda_mu(x) = sum_{n>=0} (-1)^n x^(2n) / (((mu+2)/2)_n ((mu+3)/2)_n 4^n)

shares its coefficient magnitudes with lambda_{mu-1/2,1/2} and alternates in
sign, and S_mu(x) = x^(mu+1/2) Lambda_mu(x) / (mu (mu+1)).

Admissibility: mu > -1 and neither A nor B a nonpositive integer (so no
coefficient denominator vanishes); equivalently mu +- nu not in
{-3, -5, -7, ...}.

Evaluation regimes for the alternating series: for |x| <= _ASYM_SWITCH the sum
runs in double-double arithmetic because the terms grow like e^|x| before
cancelling down to an O(|x|^(-mu-1)) value; beyond the switch a large-x
expansion takes over (see _capital_lambda_asymptotic).  The monotone modified
series needs no such care.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._compensated import dd_add, dd_div, dd_mul, two_prod, two_sum
from .errors import (
    AdmissibilityError,
    ConvergenceError,
    DegeneratePrefactorError,
    DomainError,
)

_TERM_CAP = 10_000
_REL_CUTOFF = 1e-16
_RATIO_CUTOFF = 0.5
_ASYM_SWITCH = 30.0
_DD_EPS = 2.0 ** -100
_GRID_DIRECT_LIMIT = 12.0  # plain-double alternating sums are trustworthy here


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def _is_nonpositive_integer(v: float) -> bool:
    return v <= 0.0 and v == math.floor(v)


@dataclass(frozen=True)
class Params:
    """Admissible parameter pair (mu, nu) for the modified functions."""

    mu: float
    nu: float

    def __post_init__(self) -> None:
        if not (self.mu > -1.0):
            raise AdmissibilityError(f"mu must exceed -1, got mu={self.mu}")
        if _is_nonpositive_integer(self.a) or _is_nonpositive_integer(self.b):
            raise AdmissibilityError(
                f"(mu, nu) = ({self.mu}, {self.nu}) makes a coefficient "
                "denominator vanish (mu +- nu in {-3, -5, -7, ...})"
            )

    @property
    def a(self) -> float:
        return (self.mu - self.nu + 3.0) / 2.0

    @property
    def b(self) -> float:
        return (self.mu + self.nu + 3.0) / 2.0

    def prefactor(self) -> float:
        """(mu-nu+1)(mu+nu+1), the normalization of L; may be zero."""
        return (self.mu - self.nu + 1.0) * (self.mu + self.nu + 1.0)


@dataclass(frozen=True)
class HalfIntFamily:
    """Half-integer-order family member, parametrized by mu > -1."""

    mu: float

    def __post_init__(self) -> None:
        if not (self.mu > -1.0):
            raise AdmissibilityError(f"family mu must exceed -1, got {self.mu}")

    @property
    def a(self) -> float:
        return (self.mu + 2.0) / 2.0

    @property
    def b(self) -> float:
        return (self.mu + 3.0) / 2.0

    def as_params(self) -> Params:
        """The modified-series parameters (mu - 1/2, 1/2) sharing this
        family's coefficient denominators."""
        return Params(self.mu - 0.5, 0.5)

    def prefactor(self) -> float:
        """mu (mu + 1), the normalization of S; zero at mu = 0."""
        return self.mu * (self.mu + 1.0)


@dataclass(frozen=True)
class SeriesValue:
    """A computed value with a conservative absolute error bound."""

    value: float
    error_bound: float
    terms_used: int


def _falling(m: int, k: int) -> float:
    """Falling factorial m (m-1) ... (m-k+1)."""
    out = 1.0
    for i in range(k):
        out *= m - i
    return out


def _eval_even_series(
    a: float,
    b: float,
    x: float,
    deriv: int,
    alternating: bool,
    skip_constant: bool,
) -> SeriesValue:
    """Plain-double sum of d^deriv/dx^deriv of the even series.

    Truncation rule: stop once the incoming contribution is below
    _REL_CUTOFF times the current partial sum AND the term ratio has
    dropped below _RATIO_CUTOFF; the omitted contribution is not added and
    the error bound is twice its magnitude.  Alternating sums add a
    cancellation term, largest intermediate partial times machine epsilon.
    """
    if deriv < 0:
        raise ValueError("derivative order must be nonnegative")
    if x == 0.0:
        if deriv % 2 == 1:
            return SeriesValue(0.0, 0.0, 1)
        n = deriv // 2
        if skip_constant and n == 0:
            return SeriesValue(0.0, 0.0, 1)
        coeff = 1.0
        for i in range(n):
            coeff /= 4.0 * (a + i) * (b + i)
        if alternating and n % 2 == 1:
            coeff = -coeff
        return SeriesValue(coeff * math.factorial(deriv), 0.0, 1)

    x2 = x * x
    inv_x = 1.0 / x
    # term recurrence keeps magnitudes honest at large |x|; the split form
    # coeff * x^(2n) would under/overflow separately long before the term does
    term = 1.0  # (+-1)^n x^(2n) / ((a)_n (b)_n 4^n)
    total = 0.0
    comp = 0.0  # Kahan compensation
    max_partial = 0.0
    prev_mag = math.inf
    n = 0
    terms = 0
    while n <= _TERM_CAP:
        if 2 * n >= deriv and not (skip_constant and n == 0):
            contrib = term * _falling(2 * n, deriv) * inv_x ** deriv if deriv else term
            mag = abs(contrib)
            if (
                terms > 0
                and mag < _REL_CUTOFF * abs(total)
                and mag < _RATIO_CUTOFF * prev_mag
            ):
                eb = 2.0 * mag
                if alternating:
                    eb += max_partial * 2.22e-16
                return SeriesValue(total, eb, terms)
            y = contrib - comp
            t = total + y
            comp = (t - total) - y
            total = t
            if math.isinf(total):
                raise ConvergenceError(f"series overflowed at x={x} (term {n})")
            max_partial = max(max_partial, abs(total))
            prev_mag = mag
            terms += 1
        n += 1
        term *= (-x2 if alternating else x2) / (4.0 * (a + n - 1) * (b + n - 1))
        if math.isinf(term):
            raise ConvergenceError(f"series overflowed at x={x} (term {n})")
    raise ConvergenceError(
        f"series did not converge within {_TERM_CAP} terms at x={x}"
    )


def _eval_even_series_dd(
    a: float,
    b: float,
    x: float,
    deriv: int,
    skip_constant: bool,
) -> SeriesValue:
    """Double-double sum of the *alternating* even series (and derivatives).

    The term recurrence divides by each Pochhammer factor separately, with
    a + (n-1) assembled exactly by two_sum, so every term carries ~1e-31
    relative error and the cancellation noise floor sits at
    max|partial| * 2^-100 instead of max|partial| * eps.
    """
    if x == 0.0:
        return _eval_even_series(a, b, x, deriv, True, skip_constant)
    x2h, x2l = two_prod(x, x)
    th, tl = 1.0, 0.0  # signed term (-1)^n x^(2n) / ((a)_n (b)_n 4^n)
    sh, sl = 0.0, 0.0
    max_partial = 0.0
    prev_mag = math.inf
    n = 0
    terms = 0
    while n <= _TERM_CAP:
        if 2 * n >= deriv and not (skip_constant and n == 0):
            ch, cl = th, tl
            if deriv:
                ch, cl = dd_mul(ch, cl, _falling(2 * n, deriv), 0.0)
                for _ in range(deriv):
                    ch, cl = dd_div(ch, cl, x, 0.0)
            mag = abs(ch)
            if (
                terms > 0
                and mag < _REL_CUTOFF * abs(sh)
                and mag < _RATIO_CUTOFF * prev_mag
            ):
                eb = 2.0 * mag + max_partial * _DD_EPS
                return SeriesValue(sh + sl, eb, terms)
            sh, sl = dd_add(sh, sl, ch, cl)
            if math.isinf(sh):
                raise ConvergenceError(f"series overflowed at x={x} (term {n})")
            max_partial = max(max_partial, abs(sh))
            prev_mag = mag
            terms += 1
        n += 1
        d1h, d1l = two_sum(a, float(n - 1))
        d2h, d2l = two_sum(b, float(n - 1))
        th, tl = dd_mul(th, tl, -x2h, -x2l)
        th, tl = dd_div(th, tl, d1h, d1l)
        th, tl = dd_div(th, tl, d2h, d2l)
        th, tl = dd_div(th, tl, 4.0, 0.0)
    raise ConvergenceError(
        f"series did not converge within {_TERM_CAP} terms at x={x}"
    )


def _capital_lambda_asymptotic(fam: HalfIntFamily, x: float, deriv: int) -> SeriesValue:
    """Large-x evaluation of Lambda_mu and its first two derivatives.

    Lambda_mu(x) = (mu+1) Gamma(mu+1) x^(-mu-1) sin(x - pi mu / 2)
                 + mu (mu+1) sum_{j>=0} (-1)^j [prod_{k=1}^{2j} (mu-k)] x^(-2j-2),

    valid as x -> +inf.  The algebraic sum is asymptotic; terms are added
    while they decrease, which at x >= _ASYM_SWITCH leaves a truncation error
    far below the oscillatory amplitude.  Exact (terminating) for integer mu.
    """
    if deriv not in (0, 1, 2):
        raise ValueError("asymptotic branch supports derivative orders 0..2")
    mu = fam.mu
    pref_osc = (mu + 1.0) * math.gamma(mu + 1.0)
    pref_alg = mu * (mu + 1.0)
    theta = x - math.pi * mu / 2.0
    s, c = math.sin(theta), math.cos(theta)
    xp = x ** (-mu - 1.0)
    if deriv == 0:
        osc = xp * s
    elif deriv == 1:
        osc = xp * (c - (mu + 1.0) * s / x)
    else:
        osc = xp * (
            -s
            - 2.0 * (mu + 1.0) * c / x
            + (mu + 1.0) * (mu + 2.0) * s / (x * x)
        )

    alg = 0.0
    coeff = 1.0  # (-1)^j prod_{k=1}^{2j} (mu - k)
    j = 0
    prev = math.inf
    omitted = 0.0
    terms = 0
    while True:
        power = -2 * j - 2 - deriv
        contrib = coeff * _falling(-2 * j - 2, deriv) * x ** power if deriv else coeff * x ** power
        mag = abs(contrib)
        if mag >= prev or j > 600:
            omitted = mag
            break
        alg += contrib
        terms += 1
        if mag < 1e-18 * (abs(alg) + abs(osc)):
            break
        prev = mag
        j += 1
        coeff *= -(mu - (2 * j - 1)) * (mu - 2 * j)
        if coeff == 0.0:
            break

    value = pref_osc * osc + pref_alg * alg
    amp = abs(pref_osc) * xp * (1.0 + (mu + 2.0) ** 2 / x) ** deriv
    eb = abs(pref_alg) * omitted + (abs(x) + 1.0) * 2.22e-16 * amp
    return SeriesValue(value, eb, terms)


def eval_lambda(p: Params, x: float, deriv: int = 0) -> SeriesValue:
    """d^deriv/dx^deriv of the normalized modified function lambda_{mu,nu}.

    Even entire function of x; all series terms are positive, so plain
    compensated double summation is accurate at every argument that does
    not overflow.
    """
    return _eval_even_series(p.a, p.b, x, deriv, alternating=False, skip_constant=False)


def eval_lambda_derivative(p: Params, k: int, x: float) -> SeriesValue:
    """k-th derivative of lambda_{mu,nu} at x; k = 0 reproduces eval_lambda."""
    return eval_lambda(p, x, deriv=k)


def lambda_minus_one(p: Params, x: float) -> float:
    """lambda_{mu,nu}(x) - 1 at full relative accuracy near x = 0 (the
    constant term is never formed, so no cancellation)."""
    return _eval_even_series(p.a, p.b, x, 0, alternating=False, skip_constant=True).value


def eval_capital_lambda(fam: HalfIntFamily, x: float, deriv: int = 0) -> SeriesValue:
    """d^deriv/dx^deriv of the normalized unmodified function Lambda_mu.

    Even in x.  Dispatches on |x|: double-double series up to the asymptotic
    switch, large-x expansion beyond it.
    """
    ax = abs(x)
    if ax <= _ASYM_SWITCH:
        out = _eval_even_series_dd(fam.a, fam.b, ax, deriv, skip_constant=False)
    else:
        out = _capital_lambda_asymptotic(fam, ax, deriv)
    if x < 0.0 and deriv % 2 == 1:
        return SeriesValue(-out.value, out.error_bound, out.terms_used)
    return out


def capital_lambda_minus_one(fam: HalfIntFamily, x: float) -> float:
    """Lambda_mu(x) - 1 at full relative accuracy near x = 0."""
    if abs(x) > _ASYM_SWITCH:
        return eval_capital_lambda(fam, x).value - 1.0
    return _eval_even_series_dd(fam.a, fam.b, abs(x), 0, skip_constant=True).value


def eval_modified_L(p: Params, x: float) -> SeriesValue:
    """L_{mu,nu}(x) = x^(mu+1) lambda_{mu,nu}(x) / ((mu-nu+1)(mu+nu+1)).

    Defined for x >= 0 here (x^(mu+1) with fractional exponent).  Raises
    DegeneratePrefactorError when the normalization vanishes exactly.
    """
    d1 = p.mu - p.nu + 1.0
    d2 = p.mu + p.nu + 1.0
    if d1 == 0.0 or d2 == 0.0:
        raise DegeneratePrefactorError(
            f"(mu-nu+1)(mu+nu+1) = 0 for (mu, nu) = ({p.mu}, {p.nu})"
        )
    if x < 0.0:
        raise DomainError("L is evaluated for x >= 0")
    if x == 0.0:
        return SeriesValue(0.0, 0.0, 1)
    lam = eval_lambda(p, x)
    pre = x ** (p.mu + 1.0) / (d1 * d2)
    return SeriesValue(pre * lam.value, abs(pre) * lam.error_bound, lam.terms_used)


def eval_lommel_S(fam: HalfIntFamily, x: float) -> SeriesValue:
    """S_mu(x) = x^(mu+1/2) Lambda_mu(x) / (mu (mu+1)) for x >= 0.

    Raises DegeneratePrefactorError at mu = 0 where the normalization
    vanishes.
    """
    pre_den = fam.prefactor()
    if pre_den == 0.0:
        raise DegeneratePrefactorError(f"mu (mu+1) = 0 for family mu = {fam.mu}")
    if x < 0.0:
        raise DomainError("S is evaluated for x >= 0")
    if x == 0.0:
        return SeriesValue(0.0, 0.0, 1)
    cap = eval_capital_lambda(fam, x)
    pre = x ** (fam.mu + 0.5) / pre_den
    return SeriesValue(pre * cap.value, abs(pre) * cap.error_bound, cap.terms_used)


def recurrence_residual_modified(p: Params, x: float) -> float:
    """Residual of L_{mu+2,nu} = ((mu+1)^2 - nu^2) L_{mu,nu} - x^(mu+1).

    Zero in exact arithmetic for admissible parameters with nonzero
    prefactors; the returned float is evidence of evaluation quality.
    """
    p2 = Params(p.mu + 2.0, p.nu)
    lhs = eval_modified_L(p2, x).value
    rhs = ((p.mu + 1.0) ** 2 - p.nu ** 2) * eval_modified_L(p, x).value
    return lhs - rhs + x ** (p.mu + 1.0)


def _modified_L_derivs(p: Params, x: float) -> tuple[float, float, float]:
    """(L, L', L'') from the term-wise differentiated series."""
    d = p.prefactor()
    if d == 0.0:
        raise DegeneratePrefactorError(
            f"(mu-nu+1)(mu+nu+1) = 0 for (mu, nu) = ({p.mu}, {p.nu})"
        )
    if x <= 0.0:
        raise DomainError("derivative evaluation needs x > 0")
    lam0 = eval_lambda(p, x).value
    lam1 = eval_lambda(p, x, 1).value
    lam2 = eval_lambda(p, x, 2).value
    m = p.mu
    xp = x ** (m + 1.0)
    f0 = xp * lam0 / d
    f1 = ((m + 1.0) * xp / x * lam0 + xp * lam1) / d
    f2 = (
        (m + 1.0) * m * xp / (x * x) * lam0
        + 2.0 * (m + 1.0) * xp / x * lam1
        + xp * lam2
    ) / d
    return f0, f1, f2


def ode_residual_modified(p: Params, x: float) -> float:
    """Residual of x^2 L'' + x L' - (x^2 + nu^2) L = x^(mu+1)."""
    f0, f1, f2 = _modified_L_derivs(p, x)
    return x * x * f2 + x * f1 - (x * x + p.nu ** 2) * f0 - x ** (p.mu + 1.0)


def ode_residual_family(fam: HalfIntFamily, x: float) -> float:
    """Residual of x^2 S'' + x S' + (x^2 - 1/4) S = x^(mu+1/2)."""
    d = fam.prefactor()
    if d == 0.0:
        raise DegeneratePrefactorError(f"mu (mu+1) = 0 for family mu = {fam.mu}")
    if x <= 0.0:
        raise DomainError("derivative evaluation needs x > 0")
    cap0 = eval_capital_lambda(fam, x).value
    cap1 = eval_capital_lambda(fam, x, 1).value
    cap2 = eval_capital_lambda(fam, x, 2).value
    m = fam.mu
    xp = x ** (m + 0.5)
    s0 = xp * cap0 / d
    s1 = ((m + 0.5) * xp / x * cap0 + xp * cap1) / d
    s2 = (
        (m + 0.5) * (m - 0.5) * xp / (x * x) * cap0
        + 2.0 * (m + 0.5) * xp / x * cap1
        + xp * cap2
    ) / d
    return x * x * s2 + x * s1 + (x * x - 0.25) * s0 - xp


def ode_residual(p: Params | HalfIntFamily, x: float, modified: bool = True) -> float:
    """Residual of the defining differential equation at x.

    modified=True evaluates the modified equation for L_{mu,nu} (either a
    Params pair or a family member via its (mu-1/2, 1/2) parameters);
    modified=False evaluates the unmodified equation for S, which exists
    only for the half-integer family (nu = 1/2).
    """
    if modified:
        params = p.as_params() if isinstance(p, HalfIntFamily) else p
        return ode_residual_modified(params, x)
    if isinstance(p, HalfIntFamily):
        fam = p
    elif p.nu == 0.5:
        fam = HalfIntFamily(p.mu + 0.5)
    else:
        raise DomainError(
            "the unmodified equation is implemented for the nu = 1/2 family only"
        )
    return ode_residual_family(fam, x)


def _even_series_grid(
    a: float, b: float, xs: np.ndarray, deriv: int, alternating: bool
) -> np.ndarray:
    """Vectorized plain-double sum over a grid; used by the certification
    and report paths where every |x| is moderate."""
    xs = np.asarray(xs, dtype=float)
    if xs.size == 0:
        return np.zeros_like(xs)
    out = np.zeros_like(xs)
    x2 = xs * xs
    ratio_base = -x2 if alternating else x2
    # inverse powers for the derivative factor; zero entries are special-cased
    nonzero = xs != 0.0
    with np.errstate(divide="ignore"):
        inv_pow = np.where(nonzero, xs, 1.0) ** (-deriv) if deriv else None
    term = np.ones_like(xs)  # (+-1)^n x^(2n) / ((a)_n (b)_n 4^n)
    n = 0
    max_abs = 1e-300
    while n <= _TERM_CAP:
        if 2 * n >= deriv:
            ff = _falling(2 * n, deriv)
            if deriv:
                contrib = term * ff * inv_pow
                if 2 * n == deriv:
                    # only term surviving at x = 0; take the limit there
                    c0 = 1.0
                    for i in range(n):
                        c0 /= 4.0 * (a + i) * (b + i)
                    if alternating and n % 2 == 1:
                        c0 = -c0
                    contrib = np.where(nonzero, contrib, c0 * math.factorial(deriv))
                else:
                    contrib = np.where(nonzero, contrib, 0.0)
            else:
                contrib = term
            out = out + contrib
            peak = float(np.max(np.abs(contrib)))
            max_abs = max(max_abs, float(np.max(np.abs(out))))
            if n > 2 and peak < _REL_CUTOFF * max_abs:
                ratio = float(np.max(x2)) / (4.0 * (a + n) * (b + n))
                if ratio < _RATIO_CUTOFF:
                    return out
        n += 1
        term = term * (ratio_base / (4.0 * (a + n - 1) * (b + n - 1)))
    raise ConvergenceError("grid series did not converge within the term cap")


def lambda_grid(p: Params, xs: np.ndarray, deriv: int = 0) -> np.ndarray:
    """Vectorized lambda_{mu,nu} (or derivative) over a grid."""
    return _even_series_grid(p.a, p.b, xs, deriv, alternating=False)


def capital_lambda_grid(fam: HalfIntFamily, xs: np.ndarray, deriv: int = 0) -> np.ndarray:
    """Vectorized Lambda_mu (or derivative) over a grid.

    The plain-double alternating sum is reliable only for moderate |x|;
    points beyond _GRID_DIRECT_LIMIT fall back to the scalar evaluator.
    """
    xs = np.asarray(xs, dtype=float)
    if xs.size == 0:
        return np.zeros_like(xs)
    if float(np.max(np.abs(xs))) <= _GRID_DIRECT_LIMIT:
        return _even_series_grid(fam.a, fam.b, xs, deriv, alternating=True)
    flat = xs.reshape(-1)
    vals = np.array([eval_capital_lambda(fam, float(x), deriv).value for x in flat])
    return vals.reshape(xs.shape)
