"""Polynomials on balls: evaluation, recentering, quantitative bounds."""

import math
from fractions import Fraction

import pytest

from padicore import (
    DomainError,
    Padic,
    PadicPolynomial,
    ValuationGrowthRule,
    lipschitz_bound,
    quadratic_bound,
    radius_of_convergence,
)
from padicore.errors import UnsupportedRuleError
from helpers import random_padic, random_unit, rng_for


def _poly(p, coeffs, prec=12):
    return PadicPolynomial(p, coeffs, abs_prec=prec)


# ----------------------------------------------------------------- examples


def test_eval_examples():
    f = _poly(7, [1, 0, 1])
    assert f.evaluate(Padic.from_int(3, 7, 6)).residue(2).value == 10
    c = _poly(5, [9])
    assert c.evaluate(Padic.from_int(123, 5, 6)).residue(3).value == 9
    g = _poly(5, [0, 0, 1])
    x = Padic.from_int(10, 5, 6)
    assert g.evaluate(x).valuation() == 2


def test_eval_outside_ball_rejected():
    f = _poly(5, [0, 1])
    with pytest.raises(DomainError):
        f.evaluate(Padic.from_int(3, 5, 6), min_valuation=1)


def test_recenter_examples():
    f = _poly(7, [0, 0, 1])
    g = f.recenter(Padic.from_int(3, 7, 8))
    values = [c.residue(3).value for c in g.coeffs]
    assert values == [9, 6, 1]
    h = f.recenter(Padic.zero(7, 12))
    assert [c.residue(3).value for c in h.coeffs] == [0, 0, 1]


def test_recenter_p_power_coefficient_sizes():
    """Recentring x^p at a unit gives middle coefficients of size 1/p."""
    p = 5
    f = _poly(p, [0] * p + [1])
    x0 = Padic.from_int(2, p, 12)
    g = f.recenter(x0)
    for ell in range(1, p):
        assert g.coeffs[ell].valuation() == 1
    assert g.coeffs[p].valuation() == 0
    assert g.coeffs[0].valuation() == 0


def test_bounds_examples():
    assert lipschitz_bound(_poly(7, [0, 0, 1]), 0) == 0
    assert lipschitz_bound(_poly(7, [0, 7]), 0) == 1
    assert lipschitz_bound(_poly(7, [0, 1, 0, 1]), 1) == 0
    assert quadratic_bound(_poly(7, [0, 0, 1]), 0) == 0
    assert quadratic_bound(_poly(5, [0] * 5 + [1]), 0) == 0
    assert quadratic_bound(_poly(7, [3, 4]), 2) == math.inf
    with pytest.raises(DomainError):
        lipschitz_bound(_poly(7, [3]), 0)


def test_derivative_example():
    f = _poly(5, [1, 2, 3])
    d = f.derivative()
    assert [c.residue(2).value for c in d.coeffs] == [2, 6]


def test_trailing_literal_zeros_trimmed():
    f = PadicPolynomial(5, [1, 2, 0, 0])
    assert f.degree == 1
    g = PadicPolynomial(5, [1, 2, Padic.zero(5, 4)])
    assert g.degree == 2  # uncertainty is not an exact zero


# --------------------------------------------------------------- invariants


@pytest.mark.parametrize("p", [2, 3, 7])
def test_recenter_evaluate_consistency(p):
    rng = rng_for(f"recenter-eval-{p}")
    for _ in range(40):
        coeffs = [random_padic(rng, p, 10, 0, 2) for _ in range(rng.randrange(2, 6))]
        f = PadicPolynomial(p, coeffs)
        x0 = random_padic(rng, p, 10, 0, 3)
        y = random_padic(rng, p, 10, 0, 3)
        g = f.recenter(x0)
        direct = f.evaluate(x0 + y)
        shifted = g.evaluate(y)
        assert (direct - shifted).is_zero


@pytest.mark.parametrize("p", [3, 5])
def test_recentered_coefficient_bound(p):
    """With |x0| <= 1, v of each recentered coefficient >= min of the tail."""
    rng = rng_for(f"recenter-bound-{p}")
    for _ in range(40):
        coeffs = [random_padic(rng, p, 10, 0, 3) for _ in range(rng.randrange(2, 7))]
        f = PadicPolynomial(p, coeffs)
        x0 = random_padic(rng, p, 10, 0, 2)
        g = f.recenter(x0)
        for ell in range(len(g.coeffs)):
            tail_min = min(c.valuation_bound for c in f.coeffs[ell:])
            assert g.coeffs[ell].valuation_bound >= tail_min


@pytest.mark.parametrize("p", [3, 5, 7])
def test_first_and_second_order_laws(p):
    rng = rng_for(f"m-laws-{p}")
    for _ in range(60):
        m = rng.randrange(0, 2)
        coeffs = [random_padic(rng, p, 12, 0, 2) for _ in range(rng.randrange(2, 6))]
        f = PadicPolynomial(p, coeffs)
        mu1 = lipschitz_bound(f, m)
        mu2 = quadratic_bound(f, m)
        x = random_padic(rng, p, 12, m, m + 3)
        y = random_padic(rng, p, 12, m, m + 3)
        d = x - y
        if d.is_zero:
            continue
        left = f.evaluate(x) - f.evaluate(y)
        assert left.valuation_bound >= mu1 + d.valuation()
        if mu2 != math.inf:
            fprime_y = f.derivative().evaluate(y)
            rem = left - fprime_y * d
            assert rem.valuation_bound >= mu2 + 2 * d.valuation()


@pytest.mark.parametrize("p,n", [(5, 3), (7, 2), (3, 4), (7, 12)])
def test_monomial_isometry_prime_to_p(p, n):
    """x -> x^n with gcd(n, p) = 1 is an isometry near a unit."""
    assert n % p != 0
    rng = rng_for(f"isometry-{p}-{n}")
    for _ in range(200):
        x = random_unit(rng, p, 12)
        y = random_unit(rng, p, 12)
        if (x - y).is_zero or (x - y).valuation() < 1:
            continue
        lhs = x**n - y**n
        assert lhs.valuation() == (x - y).valuation()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_p_power_dichotomy(p):
    rng = rng_for(f"dichotomy-{p}")
    for _ in range(300):
        x = random_unit(rng, p, 14)
        y = random_unit(rng, p, 14)
        d = x - y
        if d.is_zero:
            continue
        lhs = x**p - y**p
        if d.valuation() >= 1:
            assert lhs.valuation() == d.valuation() + 1
        else:
            assert lhs.valuation() == 0


def test_derivative_never_grows():
    rng = rng_for("derivative-growth")
    for p in (2, 3, 5):
        for _ in range(20):
            coeffs = [random_padic(rng, p, 10, 0, 2) for _ in range(5)]
            f = PadicPolynomial(p, coeffs)
            for j, c in enumerate(f.derivative().coeffs):
                assert c.valuation_bound >= f.coeffs[j + 1].valuation_bound


# --------------------------------------------------- radius of convergence


def test_radius_geometric_rule():
    report = radius_of_convergence(ValuationGrowthRule(0, 0, 0))
    assert report.rho_exponent == 0
    assert not report.terms_vanish_on_boundary


def test_radius_log_rule():
    report = radius_of_convergence(ValuationGrowthRule(0, 1, 0))
    assert report.rho_exponent == 0
    assert not report.terms_vanish_on_boundary
    assert "unbounded" in report.witness


def test_radius_slope_rule():
    report = radius_of_convergence(ValuationGrowthRule(Fraction(1), 0, 0))
    assert report.rho_exponent == 1


def test_radius_unsupported_shapes():
    with pytest.raises(UnsupportedRuleError):
        ValuationGrowthRule(Fraction(-1), 0, 0)
    with pytest.raises(UnsupportedRuleError):
        ValuationGrowthRule(0, 2, 0)
    with pytest.raises(UnsupportedRuleError):
        radius_of_convergence("not a rule")
