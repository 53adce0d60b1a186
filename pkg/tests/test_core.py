"""Evaluator tests: frozen oracles, closed forms, residual identities."""
from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import refs
from lommel import (
    AdmissibilityError,
    ConvergenceError,
    DegeneratePrefactorError,
    DomainError,
    HalfIntFamily,
    Params,
    capital_lambda_grid,
    capital_lambda_minus_one,
    eval_capital_lambda,
    eval_lambda,
    eval_lambda_derivative,
    eval_lommel_S,
    eval_modified_L,
    lambda_grid,
    lambda_minus_one,
    ode_residual,
    ode_residual_family,
    ode_residual_modified,
    pochhammer,
    recurrence_residual_modified,
)

# 60-digit reference values, frozen; independent of the code under test
ORACLE = {
    "lambda_0.7_0.3_at_2.5": 1.558219078244065000716,
    "dlambda_0.7_0.3_at_2.5": 0.5340577638882887376608,
    "d2lambda_0.7_0.3_at_2.5": 0.3681952667473357021122,
    "d3lambda_0.7_0.3_at_1.5": 0.0983030224272195308149,
    "modified_L_0.7_0.3_at_2.5": 2.642217111348224141021,
    "capital_0.6_at_2.0": 0.6339648023385516357883,
    "dcapital_0.6_at_2.0": -0.3095232264148083424239,
    "S_0.6_at_2.0": 1.415555523601096192917,
    "capital_0.5_at_35": 0.002770503461733619039273,
    "capital_2.0_at_50": 0.002412593992977788581724,
}


def rel_err(got: float, want: float) -> float:
    return abs(got - want) / max(1.0, abs(want))


def test_pochhammer_basics():
    assert pochhammer(3.7, 0) == 1.0
    assert pochhammer(2.5, 3) == pytest.approx(2.5 * 3.5 * 4.5, rel=1e-15)
    assert pochhammer(1.0, 5) == pytest.approx(math.factorial(5), rel=1e-15)
    assert pochhammer(-2.0, 3) == 0.0


def test_admissibility():
    Params(0.5, 0.25)
    Params(-0.5, 1.0)
    with pytest.raises(AdmissibilityError):
        Params(-1.0, 0.0)
    with pytest.raises(AdmissibilityError):
        Params(-2.5, 0.0)
    with pytest.raises(AdmissibilityError):
        # mu - nu = -3 makes the first Pochhammer base vanish
        Params(0.0, 3.0)
    with pytest.raises(AdmissibilityError):
        Params(0.0, -3.0)
    with pytest.raises(AdmissibilityError):
        HalfIntFamily(-1.0)


def test_param_helpers():
    p = Params(0.7, 0.3)
    assert p.a == pytest.approx((0.7 - 0.3 + 3.0) / 2.0, rel=1e-16)
    assert p.b == pytest.approx((0.7 + 0.3 + 3.0) / 2.0, rel=1e-16)
    fam = HalfIntFamily(0.6)
    assert fam.a == pytest.approx(2.6 / 2.0, rel=1e-16)
    assert fam.b == pytest.approx(3.6 / 2.0, rel=1e-16)
    q = fam.as_params()
    assert q.mu == pytest.approx(0.1, abs=1e-16)
    assert q.nu == 0.5


def test_oracle_values():
    p = Params(0.7, 0.3)
    fam = HalfIntFamily(0.6)
    assert rel_err(eval_lambda(p, 2.5).value, ORACLE["lambda_0.7_0.3_at_2.5"]) < 1e-15
    assert rel_err(eval_lambda_derivative(p, 1, 2.5).value,
                   ORACLE["dlambda_0.7_0.3_at_2.5"]) < 1e-15
    assert rel_err(eval_lambda_derivative(p, 2, 2.5).value,
                   ORACLE["d2lambda_0.7_0.3_at_2.5"]) < 1e-15
    assert rel_err(eval_lambda_derivative(p, 3, 1.5).value,
                   ORACLE["d3lambda_0.7_0.3_at_1.5"]) < 1e-14
    assert rel_err(eval_modified_L(p, 2.5).value,
                   ORACLE["modified_L_0.7_0.3_at_2.5"]) < 1e-14
    assert rel_err(eval_capital_lambda(fam, 2.0).value,
                   ORACLE["capital_0.6_at_2.0"]) < 1e-15
    assert rel_err(eval_capital_lambda(fam, 2.0, deriv=1).value,
                   ORACLE["dcapital_0.6_at_2.0"]) < 1e-15
    assert rel_err(eval_lommel_S(fam, 2.0).value, ORACLE["S_0.6_at_2.0"]) < 1e-14


def test_oracle_asymptotic_regime():
    got = eval_capital_lambda(HalfIntFamily(0.5), 35.0).value
    assert abs(got - ORACLE["capital_0.5_at_35"]) < 1e-14 * abs(ORACLE["capital_0.5_at_35"]) + 1e-16
    got = eval_capital_lambda(HalfIntFamily(2.0), 50.0).value
    assert abs(got - ORACLE["capital_2.0_at_50"]) < 1e-14 * abs(ORACLE["capital_2.0_at_50"]) + 1e-16


def test_regime_seam_is_smooth():
    # the series/asymptotic switch sits at |x| = 30; near it, both methods
    # must produce the same value at the same point
    from lommel.core import _capital_lambda_asymptotic

    for mu in (0.25, 0.5, 1.0, 2.0):
        fam = HalfIntFamily(mu)
        for x in (28.0, 29.5, 30.0):
            series_side = eval_capital_lambda(fam, x).value
            asym_side = _capital_lambda_asymptotic(fam, x, 0).value
            assert abs(series_side - asym_side) < 1e-12 * max(abs(series_side), 1e-3)


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.0, 5.0, 10.0])
def test_closed_forms(x):
    tol = 1e-13 * math.cosh(x)
    assert abs(eval_lambda(Params(-0.5, 0.5), x).value - refs.sinh_over_x(x)) < tol
    assert abs(eval_lambda(Params(-0.5, -0.5), x).value - refs.sinh_over_x(x)) < tol
    assert abs(eval_lambda(Params(0.5, 0.5), x).value
               - refs.two_coshm1_over_x2(x)) < tol
    assert abs(eval_lambda(Params(2.5, 0.5), x).value
               - refs.cosh_remainder_over_x4(x)) < tol
    assert abs(eval_capital_lambda(HalfIntFamily(0.0), x).value
               - refs.sin_over_x(x)) < 1e-13
    assert abs(eval_capital_lambda(HalfIntFamily(1.0), x).value
               - refs.two_one_minus_cos_over_x2(x)) < 1e-13


def test_value_at_origin():
    v = eval_lambda(Params(0.7, 0.3), 0.0)
    assert v.value == 1.0
    assert v.error_bound == 0.0
    assert v.terms_used >= 1
    c = eval_capital_lambda(HalfIntFamily(0.6), 0.0)
    assert c.value == 1.0
    assert c.terms_used >= 1
    assert eval_lambda_derivative(Params(0.7, 0.3), 1, 0.0).value == 0.0


def test_minus_one_variants_keep_precision():
    p = Params(0.7, 0.3)
    x = 1e-5
    m = lambda_minus_one(p, x)
    # leading term x^2 / (4 a b); cancellation-free evaluation
    lead = x * x / (4.0 * p.a * p.b)
    assert abs(m - lead) < 1e-9 * lead
    fam = HalfIntFamily(0.6)
    mc = capital_lambda_minus_one(fam, x)
    lead_f = x * x / ((fam.mu + 2.0) * (fam.mu + 3.0))
    assert abs(mc + lead_f) < 1e-9 * lead_f


def test_derivative_matches_finite_difference():
    p = Params(0.7, 0.3)
    h = 1e-6
    for x in (0.5, 1.7, 3.3):
        fd = (eval_lambda(p, x + h).value - eval_lambda(p, x - h).value) / (2.0 * h)
        assert abs(fd - eval_lambda_derivative(p, 1, x).value) < 1e-8
        fd2 = (eval_lambda(p, x + h).value - 2.0 * eval_lambda(p, x).value
               + eval_lambda(p, x - h).value) / (h * h)
        assert abs(fd2 - eval_lambda_derivative(p, 2, x).value) < 1e-3


def test_capital_derivative_matches_finite_difference():
    fam = HalfIntFamily(0.6)
    h = 1e-6
    for x in (0.5, 2.0, 31.0):
        fd = (eval_capital_lambda(fam, x + h).value
              - eval_capital_lambda(fam, x - h).value) / (2.0 * h)
        assert abs(fd - eval_capital_lambda(fam, x, deriv=1).value) < 1e-8


def test_modified_L_domain_and_degeneracy():
    p = Params(0.7, 0.3)
    assert eval_modified_L(p, 0.0).value == 0.0
    with pytest.raises(DomainError):
        eval_modified_L(p, -1.0)
    with pytest.raises(DegeneratePrefactorError):
        # nu = mu + 1 zeroes the prefactor product
        eval_modified_L(Params(0.5, 1.5), 2.0)
    with pytest.raises(DomainError):
        eval_lommel_S(HalfIntFamily(0.6), -0.5)
    with pytest.raises(DegeneratePrefactorError):
        # the family prefactor has mu(mu+1); mu = 0 kills it
        eval_lommel_S(HalfIntFamily(0.0), 1.0)


def test_recurrence_residual_small():
    rng = np.random.default_rng(7)
    for p in (Params(0.7, 0.3), Params(-0.25, 0.5), Params(1.5, 1.0)):
        for x in rng.uniform(0.05, 10.0, size=20).tolist():
            scale = max(1.0, x ** (p.mu + 1.0))
            assert abs(recurrence_residual_modified(p, x)) < 1e-9 * scale


def test_ode_residuals_small():
    rng = np.random.default_rng(11)
    p = Params(0.7, 0.3)
    fam = HalfIntFamily(0.6)
    for x in rng.uniform(0.05, 10.0, size=20).tolist():
        scale = max(1.0, x ** (p.mu + 1.0))
        assert abs(ode_residual_modified(p, x)) < 1e-8 * scale
        scale_f = max(1.0, x ** (fam.mu + 0.5))
        assert abs(ode_residual_family(fam, x)) < 1e-8 * scale_f


def test_ode_residual_dispatcher():
    p = Params(0.7, 0.3)
    fam = HalfIntFamily(0.6)
    assert ode_residual(p, 2.0, modified=True) == ode_residual_modified(p, 2.0)
    assert ode_residual(fam, 2.0, modified=False) == ode_residual_family(fam, 2.0)
    assert ode_residual(fam, 2.0, modified=True) == ode_residual_modified(fam.as_params(), 2.0)
    # a nu = 1/2 parameter pair maps onto the family equation
    assert ode_residual(Params(0.1, 0.5), 2.0, modified=False) == ode_residual_family(
        HalfIntFamily(0.6), 2.0
    )
    with pytest.raises(DomainError):
        ode_residual(Params(0.7, 0.3), 2.0, modified=False)


def test_series_overflow_raises():
    with pytest.raises(ConvergenceError):
        eval_lambda(Params(0.5, 0.25), 800.0)


def test_grid_matches_scalar():
    p = Params(0.7, 0.3)
    xs = np.linspace(0.0, 9.5, 37)
    grid = lambda_grid(p, xs)
    for x, g in zip(xs.tolist(), grid.tolist()):
        assert g == pytest.approx(eval_lambda(p, x).value, rel=1e-14, abs=1e-14)
    fam = HalfIntFamily(0.6)
    xs2 = np.linspace(0.0, 40.0, 41)  # crosses both the vector and scalar paths
    grid2 = capital_lambda_grid(fam, xs2)
    for x, g in zip(xs2.tolist(), grid2.tolist()):
        assert g == pytest.approx(eval_capital_lambda(fam, x).value, rel=5e-13, abs=1e-13)


@given(
    mu=st.floats(-0.9, 3.0),
    nu=st.floats(0.0, 1.5),
    x=st.floats(-8.0, 8.0),
)
@settings(max_examples=60, deadline=None)
def test_lambda_even_and_at_least_one(mu, nu, x):
    # positive coefficients need mu +- nu + 3 > 0; enforced by the ranges
    try:
        p = Params(mu, nu)
    except AdmissibilityError:
        return
    v = eval_lambda(p, x)
    w = eval_lambda(p, -x)
    assert v.value == pytest.approx(w.value, rel=1e-13, abs=1e-13)
    assert v.value >= 1.0 - 1e-12
    assert v.terms_used >= 1
    assert v.error_bound >= 0.0


@given(mu=st.floats(-0.9, 3.0), x=st.floats(-8.0, 8.0))
@settings(max_examples=60, deadline=None)
def test_capital_even_and_bounded(mu, x):
    fam = HalfIntFamily(mu)
    v = eval_capital_lambda(fam, x)
    w = eval_capital_lambda(fam, -x)
    assert v.value == pytest.approx(w.value, rel=1e-12, abs=1e-12)
    assert v.value <= 1.0 + 1e-12


@given(mu=st.floats(-0.9, 3.0), x=st.floats(0.01, 8.0))
@settings(max_examples=40, deadline=None)
def test_odd_derivative_parity(mu, x):
    fam = HalfIntFamily(mu)
    d_pos = eval_capital_lambda(fam, x, deriv=1).value
    d_neg = eval_capital_lambda(fam, -x, deriv=1).value
    assert d_pos == pytest.approx(-d_neg, rel=1e-11, abs=1e-12)
