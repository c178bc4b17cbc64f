"""The p-adic logarithm of 1 + x on the open unit ball, and its inversion.

log(1 + x) = sum over j >= 1 of (-1)**(j+1) x**j / j converges exactly
when v(x) >= 1: each term has valuation j*v(x) - v_p(j), which tends to
infinity there and fails to for v(x) = 0 (witnessed by the first term).

Radius thresholds live in the value group: the isometry regime
|x| < p**(-1/(p-1)) collapses to v(x) >= 1 for odd p and v(x) >= 2 for
p = 2.  That p = 2 special case is hard-coded wherever it matters, since
p**(-1/(p-1)) itself is not a value of the absolute value; log(-1) = 0
shows the threshold is sharp at p = 2.

There is no p-adic exponential here: inversion goes through the Hensel
solver applied to a rigorously truncated polynomial.
"""

from .analytic import PadicPolynomial
from .errors import DivergenceError, DomainError
from .hensel import HenselProblem, solve
from .intmath import check_prime, floor_log
from .padics import Padic


def isometry_threshold(p):
    """Least valuation t with |x| < p**(-1/(p-1)) whenever v(x) >= t."""
    return 2 if p == 2 else 1


def series_degree(p, abs_prec, domain_valuation):
    """Largest term index whose valuation bound stays below abs_prec.

    Term j has valuation at least j*s - floor(log_p j) for v(x) >= s;
    that bound is nondecreasing in j when s >= 1, so indices beyond the
    returned degree contribute nothing modulo p**abs_prec.
    """
    if domain_valuation < 1:
        raise DomainError("domain valuation bound must be at least 1")
    j = 1
    last = 0
    while j * domain_valuation - floor_log(j, p) < abs_prec:
        last = j
        j += 1
    return last


def log1p(x, abs_prec=None):
    """log(1 + x) for v(x) >= 1, exact to the tracked precision.

    Divergent inputs (v(x) = 0) raise DivergenceError carrying a witness
    term of non-positive valuation.
    """
    if not isinstance(x, Padic):
        raise DomainError("log1p expects a p-adic value")
    if abs_prec is None:
        abs_prec = x.abs_prec
    elif abs_prec > x.abs_prec:
        raise DomainError(
            f"requested precision {abs_prec} exceeds input precision {x.abs_prec}"
        )
    if x.is_zero:
        return Padic.zero(x.p, min(abs_prec, x.abs_prec))
    v = x.valuation()
    if v <= 0:
        raise DivergenceError(
            f"log series diverges for v(x) = {v}: term x^1/1 has valuation "
            f"{v} and the terms never tend to 0",
            witness_index=1,
            witness_valuation=v,
        )
    x = x.truncate(abs_prec)
    degree = series_degree(x.p, abs_prec, v)
    total = Padic.zero(x.p, abs_prec)
    power = Padic.from_int(1, x.p, cap=max(x.rel, 1))
    for j in range(1, degree + 1):
        power = power * x
        term = power / j
        total = total + (term if j % 2 == 1 else -term)
    return total


def log_series_polynomial(p, abs_prec, domain_valuation):
    """Polynomial agreeing with log(1 + x) mod p**abs_prec on v(x) >= s.

    The degree is the largest j with j*s - floor(log_p j) < abs_prec; the
    coefficients (-1)**(j+1)/j are exact rationals carried to enough
    precision that every evaluation error stays below p**abs_prec.
    """
    check_prime(p)
    if domain_valuation < 1:
        raise DomainError("no valid truncation for domain valuation below 1")
    degree = series_degree(p, abs_prec, domain_valuation)
    coeffs = [Padic.zero(p, abs_prec)]
    for j in range(1, degree + 1):
        sign = 1 if j % 2 == 1 else -1
        needed = abs_prec + floor_log(j, p)
        coeffs.append(
            Padic.from_rational(sign, j, p, abs_prec=abs_prec, cap=needed + 1)
        )
    if degree == 0:
        coeffs.append(Padic.from_int(1, p, abs_prec))
    return PadicPolynomial(p, coeffs)


def log_inverse(z, abs_prec=None):
    """The x with log(1 + x) = z, for v(z) past the isometry threshold.

    Solves the truncated series polynomial with the Hensel machinery on
    the ball v >= threshold, then verifies the answer against the full
    series.  The isometry pins v(x) = v(z), so z = 0 returns 0.
    """
    if not isinstance(z, Padic):
        raise DomainError("log_inverse expects a p-adic value")
    p = z.p
    s = isometry_threshold(p)
    if abs_prec is None:
        abs_prec = z.abs_prec
    if z.is_zero:
        return Padic.zero(p, min(abs_prec, z.abs_prec))
    if z.valuation() < s:
        raise DomainError(
            f"inversion needs v(z) >= {s} for p = {p}; got v(z) = {z.valuation()}"
        )
    z = z.truncate(min(abs_prec, z.abs_prec))
    poly = log_series_polynomial(p, z.abs_prec, s)
    center = Padic.zero(p, z.abs_prec + s)
    problem = HenselProblem(poly, center, m=s, t_exp=s)
    x = solve(problem, z)
    check = log1p(x) - z
    assert check.is_zero, "inverted value fails the full-series check"
    return x
