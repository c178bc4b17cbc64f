"""Quantitative root solving on p-adic balls via contraction iteration.

For a polynomial f with coefficients of nonnegative valuation on the ball
B(x0, p**-t_exp) inside B(0, p**-m), the solvability condition is

    t_exp + mu2 > v(f'(x0)),      mu2 = quadratic_bound(f, m),

the valuation form of "t times the second-order constant is smaller than
|f'(x0)|".  Under it, f maps the ball bijectively onto
B(f(x0), p**-(v(f'(x0)) + t_exp)), every x in the ball has
v(f'(x)) = v(f'(x0)), and v(f(x) - f(y)) = v(f'(x0)) + v(x - y) exactly.

``solve`` iterates the fixed-point map

    h(x) = x0 + f'(x0)**-1 * (z - f(x0)) - f'(x0)**-1 * g0(x),
    g0(x) = f(x) - f(x0) - f'(x0) * (x - x0),

whose Lipschitz valuation gap is (t_exp + mu2) - v(f'(x0)) >= 1, so each
step gains at least one digit and the loop ends within the working
precision.  A classical Newton wrapper is provided and agrees with the
fixed-point route to precision.

Derived conveniences: square roots, n-th roots prime to p, Teichmuller
lifts, and an exhaustive ball-image verifier for small moduli.
"""

import math
from dataclasses import dataclass

from .analytic import PadicPolynomial, quadratic_bound
from .errors import (
    ConditionNotMetError,
    DomainError,
    EnumerationGuardError,
    IndeterminateConditionError,
    NoRootError,
)
from .padics import Padic

_IMAGE_GUARD = 10**6


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the contraction-condition check.

    ``ok`` is the strict inequality needed for the closed-ball statement;
    ``ok_nonstrict`` is the relaxed form that still yields the open-ball
    conclusions.  ``gap`` = t_exp + mu2 - v(f'(x0)) is the per-step
    valuation gain of the iteration when positive.
    """

    ok: bool
    ok_nonstrict: bool
    derivative_valuation: int
    mu2: object  # int or math.inf
    gap: object  # int or math.inf


def check_condition(f, x0, m, t_exp):
    """Check the solvability condition for f on B(x0, p**-t_exp)."""
    if not isinstance(f, PadicPolynomial):
        raise DomainError("expected a PadicPolynomial")
    if not isinstance(x0, Padic):
        x0 = Padic.from_int(x0, f.p)
    if x0.valuation_bound < m:
        raise DomainError(f"center valuation {x0.valuation_bound} below ball exponent {m}")
    if t_exp < m:
        raise DomainError("ball exponent t_exp must be >= the ambient exponent m")
    fprime_x0 = f.derivative().evaluate(x0)
    if fprime_x0.is_zero:
        raise IndeterminateConditionError(
            f"f'(x0) is zero to precision O(p^{fprime_x0.abs_prec}); "
            "the condition cannot be decided"
        )
    vfp = fprime_x0.valuation()
    mu2 = quadratic_bound(f, m)
    gap = t_exp + mu2 - vfp if mu2 != math.inf else math.inf
    return ConditionReport(
        ok=gap > 0,
        ok_nonstrict=gap >= 0,
        derivative_valuation=vfp,
        mu2=mu2,
        gap=gap,
    )


class HenselProblem:
    """A polynomial, a center, and a ball on which solving is certified."""

    __slots__ = ("f", "x0", "m", "t_exp", "fprime", "fprime_x0", "f_x0", "report")

    def __init__(self, f, x0, m=0, t_exp=None):
        if not isinstance(x0, Padic):
            x0 = Padic.from_int(x0, f.p)
        if t_exp is None:
            t_exp = m + 1
        report = check_condition(f, x0, m, t_exp)
        if not report.ok:
            raise ConditionNotMetError(
                f"contraction condition fails: t_exp + mu2 = {t_exp + report.mu2} "
                f"is not greater than v(f'(x0)) = {report.derivative_valuation}"
            )
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "t_exp", t_exp)
        object.__setattr__(self, "fprime", f.derivative())
        object.__setattr__(self, "fprime_x0", self.fprime.evaluate(x0))
        object.__setattr__(self, "f_x0", f.evaluate(x0))
        object.__setattr__(self, "report", report)

    def __setattr__(self, name, value):
        raise AttributeError("HenselProblem is immutable")

    def target_valuation(self):
        """Solvable right-hand sides satisfy v(z - f(x0)) >= this."""
        return self.report.derivative_valuation + self.t_exp


def solve(problem, z):
    """The unique x in the certified ball with f(x) = z, to precision.

    Requires v(z - f(x0)) >= v(f'(x0)) + t_exp (z in the image ball).
    """
    f = problem.f
    if not isinstance(z, Padic):
        z = Padic.from_int(z, f.p)
    shift = z - problem.f_x0
    if shift.valuation_bound < problem.target_valuation():
        raise ConditionNotMetError(
            f"right-hand side outside the image ball: v(z - f(x0)) = "
            f"{shift.valuation_bound} < {problem.target_valuation()}"
        )
    c = problem.fprime_x0.invert()
    base = problem.x0 + c * shift
    x = problem.x0
    max_steps = max(x.abs_prec, z.abs_prec, 1) + 2
    for _ in range(max_steps):
        g0 = f.evaluate(x) - problem.f_x0 - problem.fprime_x0 * (x - problem.x0)
        x_next = base - c * g0
        done = (x_next - x).is_zero
        x = x_next
        if done:
            break
    else:
        raise AssertionError("contraction failed to settle; internal invariant broken")
    residual = f.evaluate(x) - z
    assert residual.is_zero, "root does not satisfy f(x) = z at working precision"
    assert (x - problem.x0).valuation_bound >= problem.t_exp
    return x


def solve_newton(problem, z):
    """Classical Newton iteration for the same problem; same limit as solve."""
    f = problem.f
    fprime = problem.fprime
    if not isinstance(z, Padic):
        z = Padic.from_int(z, f.p)
    shift = z - problem.f_x0
    if shift.valuation_bound < problem.target_valuation():
        raise ConditionNotMetError("right-hand side outside the image ball")
    x = problem.x0
    max_steps = max(x.abs_prec, z.abs_prec, 1) + 2
    for _ in range(max_steps):
        step = (f.evaluate(x) - z) * fprime.evaluate(x).invert()
        x_next = x - step
        done = (x_next - x).is_zero
        x = x_next
        if done:
            break
    else:
        raise AssertionError("Newton iteration failed to settle")
    assert (f.evaluate(x) - z).is_zero
    return x


def solve_classical(f, x0, z=0):
    """Solve f(x) = z near x0 under the textbook condition.

    Requires v(f(x0) - z) > 2 v(f'(x0)); recenters f at x0 so the general
    ball condition applies with t_exp = v(f(x0) - z) - v(f'(x0)).
    """
    if not isinstance(x0, Padic):
        x0 = Padic.from_int(x0, f.p)
    if not isinstance(z, Padic):
        z = Padic.from_int(z, f.p)
    fprime_x0 = f.derivative().evaluate(x0)
    if fprime_x0.is_zero:
        raise IndeterminateConditionError("f'(x0) is zero to precision")
    vfp = fprime_x0.valuation()
    fx0 = f.evaluate(x0) - z
    if fx0.is_zero:
        return x0
    if fx0.valuation() <= 2 * vfp:
        raise ConditionNotMetError(
            f"classical condition fails: v(f(x0) - z) = {fx0.valuation()} "
            f"must exceed 2 v(f'(x0)) = {2 * vfp}"
        )
    t_exp = fx0.valuation() - vfp
    g = f.recenter(x0)
    problem = HenselProblem(g, Padic.zero(f.p, max(z.abs_prec, t_exp + 1)), m=t_exp, t_exp=t_exp)
    y = solve(problem, z)
    return x0 + y


def sqrt(u):
    """A square root of the unit u, canonical mod-p branch.

    For odd p the seed is the smaller square root of u mod p; p = 2 needs
    u = 1 mod 8 and returns the root congruent to 1 mod 4.
    """
    p = u.p
    if u.is_zero or u.valuation() != 0:
        raise DomainError("square root is provided for units only")
    if p == 2:
        # residue(3) raises PrecisionError when u is not known mod 8
        if u.residue(3).value != 1:
            raise NoRootError("2-adic units have square roots only when u = 1 mod 8")
        f = PadicPolynomial(p, [-u, 0, Padic.from_int(1, p, u.abs_prec)])
        problem = HenselProblem(f, Padic.from_int(1, p, u.abs_prec), m=0, t_exp=2)
        return solve(problem, Padic.zero(p, u.abs_prec))
    u0 = u.residue(1).value
    seed = next((s for s in range(p) if s * s % p == u0), None)
    if seed is None:
        raise NoRootError(f"{u0} is not a quadratic residue mod {p}")
    f = PadicPolynomial(p, [-u, 0, Padic.from_int(1, p, u.abs_prec)])
    problem = HenselProblem(f, Padic.from_int(seed, p, u.abs_prec), m=0, t_exp=1)
    return solve(problem, Padic.zero(p, u.abs_prec))


def nth_root(u, n):
    """An n-th root of the unit u for n prime to p, canonical mod-p branch."""
    p = u.p
    if u.is_zero or u.valuation() != 0:
        raise DomainError("n-th root is provided for units only")
    if n < 1:
        raise DomainError("root degree must be a positive integer")
    if n % p == 0:
        raise DomainError(f"root degree {n} must be prime to p = {p}")
    if n == 1:
        return u
    u0 = u.residue(1).value
    seed = next((s for s in range(p) if pow(s, n, p) == u0), None)
    if seed is None:
        raise NoRootError(f"{u0} is not an {n}-th power residue mod {p}")
    coeffs = [-u] + [0] * (n - 1) + [Padic.from_int(1, p, u.abs_prec)]
    f = PadicPolynomial(p, coeffs)
    problem = HenselProblem(f, Padic.from_int(seed, p, u.abs_prec), m=0, t_exp=1)
    return solve(problem, Padic.zero(p, u.abs_prec))


def teichmuller(a, p=None, abs_prec=None):
    """The root of x**(p-1) = 1 congruent to the unit a mod p.

    Computed by the p-power iteration x -> x**p, a quadratically
    convergent fixed point; the Hensel route on x**(p-1) - 1 gives the
    same value and serves as an independent cross-check in the tests.
    """
    if isinstance(a, Padic):
        p = a.p
        if abs_prec is None:
            abs_prec = a.abs_prec
        if a.is_zero or a.valuation() != 0:
            raise DomainError("Teichmuller lift is defined for units only")
        seed = a.residue(1).value
    else:
        if p is None:
            raise ValueError("prime p is required for integer input")
        if abs_prec is None:
            raise ValueError("abs_prec is required for integer input")
        seed = a % p
        if seed == 0:
            raise DomainError("Teichmuller lift is defined for units only")
    modulus = p**abs_prec
    x = seed % modulus
    for _ in range(abs_prec + 1):
        x_next = pow(x, p, modulus)
        if x_next == x:
            break
        x = x_next
    else:
        raise AssertionError("p-power iteration failed to settle")
    return Padic.from_int(x, p, abs_prec)


@dataclass(frozen=True)
class BallImageReport:
    """Exhaustive comparison of f(source ball) with the predicted image."""

    status: str  # "verified" or "condition-not-met"
    equal: bool
    level: int
    source_size: int
    image_size: int
    target_size: int

    def __bool__(self):
        return self.status == "verified" and self.equal


def ball_image_check(f, x0, m, t_exp, level):
    """Enumerate f on B(x0, p**-t_exp) mod p**level and compare images.

    Verifies that the residues of f on the source ball are exactly the
    residues of B(f(x0), p**-(v(f'(x0)) + t_exp)).  When the contraction
    condition fails the checker reports that and makes no claim.
    """
    p = f.p
    if not isinstance(x0, Padic):
        x0 = Padic.from_int(x0, p)
    if any(c.valuation_bound < 0 for c in f.coeffs) or x0.valuation_bound < 0:
        raise DomainError("enumeration needs integral coefficients and center")
    try:
        report = check_condition(f, x0, m, t_exp)
    except IndeterminateConditionError:
        report = None
    if report is None or not report.ok:
        return BallImageReport("condition-not-met", False, level, 0, 0, 0)
    vfp = report.derivative_valuation
    target_exp = vfp + t_exp
    if level < max(t_exp, target_exp):
        raise DomainError(
            f"level {level} too coarse: needs at least {max(t_exp, target_exp)}"
        )
    modulus = p**level
    source_size = p ** (level - t_exp)
    if modulus * source_size > _IMAGE_GUARD:
        raise EnumerationGuardError(
            f"{modulus} * {source_size} residues exceed the guard {_IMAGE_GUARD}"
        )
    coeff_lifts = [c.residue(level).value for c in f.coeffs]
    x0_lift = x0.residue(level).value
    step = p**t_exp
    image = set()
    for k in range(source_size):
        x = (x0_lift + k * step) % modulus
        acc = 0
        for c in reversed(coeff_lifts):
            acc = (acc * x + c) % modulus
        image.add(acc)
    fx0 = sum(c * x0_lift**j for j, c in enumerate(coeff_lifts)) % modulus
    tstep = p**target_exp
    target = {(fx0 + k * tstep) % modulus for k in range(p ** (level - target_exp))}
    return BallImageReport(
        "verified",
        image == target,
        level,
        source_size,
        len(image),
        len(target),
    )
