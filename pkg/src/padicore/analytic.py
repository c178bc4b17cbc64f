"""Polynomials over the p-adics viewed as analytic functions on balls.

Everything here is exact: evaluation is Horner on tracked-precision
values, Taylor recentering is a finite binomial recombination, and the
two quantitative bounds are integer minima over coefficient valuations.

Radii are restricted to integer powers of p and handled through their
exponents.  Real thresholds that fall between value-group elements (the
classic p = 2 pitfall) are translated into valuation inequalities by the
callers that need them; see the log module.

For a ball of radius p**-m and a polynomial sum a_j x^j:

* ``lipschitz_bound`` returns mu1 = min over j >= 1 of
  v(a_j) + (j - 1) * m, guaranteeing
  v(f(x) - f(y)) >= mu1 + v(x - y) on the ball;
* ``quadratic_bound`` returns mu2 = min over j >= 2 of
  v(a_j) + (j - 2) * m, guaranteeing
  v(f(x) - f(y) - f'(y)(x - y)) >= mu2 + 2 * v(x - y).

Zero-to-precision coefficients enter these minima through their valuation
lower bound, which can only weaken (never falsify) the guarantees.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PrimeMismatchError, UnsupportedRuleError
from .intmath import check_prime
from .padics import Padic


class PadicPolynomial:
    """A finite-degree polynomial with tracked-precision p-adic coefficients."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs, abs_prec=None):
        check_prime(p)
        converted = []
        literal_zero = []
        for c in coeffs:
            if isinstance(c, Padic):
                if c.p != p:
                    raise PrimeMismatchError("coefficient from a different prime")
                converted.append(c)
                literal_zero.append(False)
            elif isinstance(c, (int, Fraction)):
                converted.append(Padic.from_rational(Fraction(c), 1, p, abs_prec))
                literal_zero.append(Fraction(c) == 0)
            else:
                raise DomainError(f"cannot use {c!r} as a coefficient")
        # trailing exact (literal) zeros are trimmed; zero-to-precision
        # Padic coefficients are uncertainty and stay
        while converted and literal_zero[-1]:
            converted.pop()
            literal_zero.pop()
        if not converted:
            converted = [Padic.zero(p, abs_prec if abs_prec is not None else 1)]
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(converted))

    def __setattr__(self, name, value):
        raise AttributeError("PadicPolynomial is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, PadicPolynomial):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        inner = ", ".join(c.compact() for c in self.coeffs)
        return f"PadicPolynomial(p={self.p}, [{inner}])"

    def evaluate(self, x, min_valuation=None):
        """Exact Horner evaluation at x.

        When min_valuation is given, x must lie in the declared ball
        (v(x) >= min_valuation) or a DomainError is raised.
        """
        if not isinstance(x, Padic):
            x = Padic.from_rational(Fraction(x), 1, self.p)
        if x.p != self.p:
            raise PrimeMismatchError("argument from a different prime")
        if min_valuation is not None and x.valuation_bound < min_valuation:
            raise DomainError(
                f"argument valuation {x.valuation_bound} below the declared "
                f"ball exponent {min_valuation}"
            )
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self):
        """Formal derivative with the integer factors folded in exactly."""
        out = []
        for j in range(1, len(self.coeffs)):
            c = self.coeffs[j] * j
            # non-archimedean sanity: multiplying by an integer never grows
            assert c.valuation_bound >= self.coeffs[j].valuation_bound
            out.append(c)
        if not out:
            return PadicPolynomial(self.p, [Padic.zero(self.p, 1)])
        return PadicPolynomial(self.p, out)

    def recenter(self, x0):
        """The polynomial g with g(y) = f(x0 + y), by exact Taylor shift."""
        if not isinstance(x0, Padic):
            x0 = Padic.from_rational(Fraction(x0), 1, self.p)
        if x0.p != self.p:
            raise PrimeMismatchError("center from a different prime")
        a = list(self.coeffs)
        n = len(a)
        for l in range(n - 1):
            for j in range(n - 2, l - 1, -1):
                a[j] = a[j] + a[j + 1] * x0
        return PadicPolynomial(self.p, a)


def lipschitz_bound(f, radius_exp):
    """Valuation mu1 of the Lipschitz constant of f on p**-radius_exp balls.

    Guarantee: v(f(x) - f(y)) >= mu1 + v(x - y) for x, y in the ball.
    Constant polynomials have no Lipschitz data and raise DomainError.
    """
    if f.degree < 1:
        raise DomainError("constant polynomial: Lipschitz constant is 0")
    return min(
        f.coeffs[j].valuation_bound + (j - 1) * radius_exp
        for j in range(1, len(f.coeffs))
    )


def quadratic_bound(f, radius_exp):
    """Valuation mu2 of the second-order remainder constant of f.

    Guarantee: v(f(x) - f(y) - f'(y)(x - y)) >= mu2 + 2*v(x - y) on the
    ball of radius p**-radius_exp.  Degree below 2 gives +infinity (the
    bound is vacuous).
    """
    if f.degree < 2:
        return math.inf
    return min(
        f.coeffs[j].valuation_bound + (j - 2) * radius_exp
        for j in range(2, len(f.coeffs))
    )


@dataclass(frozen=True)
class ValuationGrowthRule:
    """Certified lower bound v(a_j) >= slope*j - logflag*floor(log_p j) - offset.

    Describes the coefficient decay of the two infinite-tail shapes this
    package needs: geometric tails (logflag = 0) and the logarithm tail
    (logflag = 1).  The bound is treated as tight when deciding boundary
    behaviour.
    """

    slope: Fraction
    logflag: int = 0
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "slope", Fraction(self.slope))
        if self.slope < 0:
            raise UnsupportedRuleError("negative slope is not a supported shape")
        if self.logflag not in (0, 1):
            raise UnsupportedRuleError("logflag must be 0 or 1")


@dataclass(frozen=True)
class RadiusReport:
    """Radius of convergence p**rho_exponent plus boundary behaviour."""

    rho_exponent: Fraction
    terms_vanish_on_boundary: bool
    witness: str


def radius_of_convergence(rule):
    """Radius exponent and boundary behaviour for a growth rule.

    With v(a_j) = slope*j - logflag*floor(log_p j) - offset, terms a_j x^j
    satisfy v = j*(slope + v(x)) - logflag*floor(log_p j) - offset, which
    tends to +infinity exactly when v(x) > -slope; so the radius is
    p**slope.  On the boundary v(x) = -slope the term valuations along
    j = p**k are -logflag*k - offset, which never tend to +infinity:
    the series diverges there for every supported shape.
    """
    if not isinstance(rule, ValuationGrowthRule):
        raise UnsupportedRuleError("expected a ValuationGrowthRule")
    if rule.logflag:
        witness = (
            "terms at indices j = p^k have boundary valuation -k - "
            f"{rule.offset}, unbounded below"
        )
    else:
        witness = (
            f"terms have constant boundary valuation -{rule.offset}, "
            "never tending to +infinity"
        )
    return RadiusReport(
        rho_exponent=rule.slope,
        terms_vanish_on_boundary=False,
        witness=witness,
    )
