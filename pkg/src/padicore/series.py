"""Formal power series and Laurent series truncated modulo T**N.

Series are plain coefficient tuples over a coefficient field descriptor:
the prime field (raw values: reduced ints) or the exact rationals (raw
values: Fraction).  Everything is an identity modulo T**N, so the
representation is truncated rather than lazy.

Products over a prime field run through the kernel layer (compiled when
available); rational products are scaled to integer convolutions so
Fraction arithmetic happens only once per output coefficient.

The T-adic size |f| = r**order(f) is kept symbolically as an RPower pair
(r, exponent); no real arithmetic is ever done on it.
"""

from fractions import Fraction
from math import gcd

from . import _kernels
from .errors import DivisionByZeroError, DomainError, FieldMismatchError
from .intmath import check_prime
from .primefield import FpElement


class PrimeFieldCoefficients:
    """Coefficient field of integers mod p; raw values are reduced ints."""

    __slots__ = ("p",)
    kind = "fp"

    def __init__(self, p):
        check_prime(p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("field descriptor is immutable")

    zero = 0

    @property
    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise FieldMismatchError("FpElement from a different prime")
            return x.value
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator % self.p
        raise DomainError(f"cannot coerce {x!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZeroError(f"0 has no inverse mod {self.p}")
        return pow(a, -1, self.p)

    def mul_int(self, n, a):
        return n * a % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeFieldCoefficients) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalCoefficients:
    """Coefficient field of exact rationals; raw values are Fractions."""

    __slots__ = ()
    kind = "q"

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise DomainError(f"cannot coerce {x!r} into the rationals")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZeroError("0 has no inverse")
        return 1 / a

    def mul_int(self, n, a):
        return n * a

    def __eq__(self, other):
        return isinstance(other, RationalCoefficients)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "QQ"


QQ = RationalCoefficients()


class RPower:
    """The exact value r**exponent for a fixed ratio 0 < r < 1.

    ``exponent is None`` encodes the value 0 (the norm of the zero
    series).  Comparisons reverse on exponents; products add them.
    """

    __slots__ = ("r", "exponent")

    def __init__(self, r, exponent):
        r = Fraction(r)
        if not 0 < r < 1:
            raise DomainError("ratio must lie strictly between 0 and 1")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("RPower is immutable")

    @property
    def is_zero(self):
        return self.exponent is None

    def _check(self, other):
        if not isinstance(other, RPower) or other.r != self.r:
            raise DomainError("RPower values with different ratios")

    def __mul__(self, other):
        self._check(other)
        if self.is_zero or other.is_zero:
            return RPower(self.r, None)
        return RPower(self.r, self.exponent + other.exponent)

    def __le__(self, other):
        self._check(other)
        if self.is_zero:
            return True
        if other.is_zero:
            return False
        return self.exponent >= other.exponent

    def __lt__(self, other):
        return self <= other and self != other

    def __eq__(self, other):
        if not isinstance(other, RPower):
            return NotImplemented
        return self.r == other.r and self.exponent == other.exponent

    def __hash__(self):
        return hash((self.r, self.exponent))

    def __repr__(self):
        if self.is_zero:
            return "0"
        return f"({self.r})^{self.exponent}"


def _common_denominator(coeffs):
    d = 1
    for c in coeffs:
        d = d * c.denominator // gcd(d, c.denominator)
    return d


def _int_convolve(a, b, n):
    out = [0] * n
    for i in range(min(len(a), n)):
        ai = a[i]
        if ai:
            for j in range(min(len(b), n - i)):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


class PowerSeries:
    """A formal power series known modulo T**prec."""

    __slots__ = ("field", "prec", "coeffs")

    def __init__(self, field, coeffs, prec=None):
        coeffs = [field.coerce(c) for c in coeffs]
        if prec is None:
            prec = len(coeffs)
        if prec < 0:
            raise DomainError("order precision must be nonnegative")
        if len(coeffs) < prec:
            coeffs.extend([field.zero] * (prec - len(coeffs)))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "coeffs", tuple(coeffs[:prec]))

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def one(cls, field, prec):
        return cls(field, [field.one], prec)

    @classmethod
    def zero_series(cls, field, prec):
        return cls(field, [], prec)

    def _check(self, other):
        if not isinstance(other, PowerSeries):
            raise DomainError("expected a PowerSeries")
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot combine series over {self.field!r} and {other.field!r}"
            )

    # ----------------------------------------------------------- arithmetic

    def __add__(self, other):
        self._check(other)
        n = min(self.prec, other.prec)
        add = self.field.add
        return PowerSeries(
            self.field,
            [add(self.coeffs[i], other.coeffs[i]) for i in range(n)],
            n,
        )

    def __neg__(self):
        neg = self.field.neg
        return PowerSeries(self.field, [neg(c) for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        n = min(self.prec, other.prec)
        if self.field.kind == "fp":
            out = _kernels.convolve_mod(
                list(self.coeffs), list(other.coeffs), n, self.field.p
            )
            return PowerSeries(self.field, out, n)
        da = _common_denominator(self.coeffs)
        db = _common_denominator(other.coeffs)
        ia = [int(c * da) for c in self.coeffs]
        ib = [int(c * db) for c in other.coeffs]
        out = _int_convolve(ia, ib, n)
        d = da * db
        return PowerSeries(self.field, [Fraction(c, d) for c in out], n)

    def scale(self, a):
        a = self.field.coerce(a)
        mul = self.field.mul
        return PowerSeries(self.field, [mul(a, c) for c in self.coeffs], self.prec)

    # -------------------------------------------------------------- queries

    def truncate(self, prec):
        """The same series known only modulo T**prec (prec <= self.prec)."""
        if prec > self.prec:
            raise DomainError(
                f"cannot raise series precision from {self.prec} to {prec}"
            )
        return PowerSeries(self.field, self.coeffs[:prec], prec)

    def order(self):
        """Index of the first nonzero stored coefficient, or None.

        None means the order is only known to be >= prec (the order of the
        zero series being +infinity).
        """
        for i, c in enumerate(self.coeffs):
            if c != self.field.zero:
                return i
        return None

    def norm(self, r):
        """The T-adic size r**order as an exact RPower; zero maps to 0."""
        return RPower(r, self.order())

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (
            self.field == other.field
            and self.prec == other.prec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.prec, self.coeffs))

    # ------------------------------------------------- inversion/composition

    def invert_one_minus(self):
        """Inverse of (1 - a) for this series a with zero constant term.

        Geometric accumulation of the powers of a; a**l contributes
        nothing below T**l, so the sum stabilises within prec steps.
        """
        if self.prec > 0 and self.coeffs[0] != self.field.zero:
            raise DomainError("geometric inversion needs zero constant term")
        ones = PowerSeries(self.field, [self.field.one] * self.prec, self.prec)
        return ones.compose(self)

    def compose(self, other):
        """The series self(other(T)); other must have zero constant term."""
        self._check(other)
        n = min(self.prec, other.prec)
        if n > 0 and other.coeffs[0] != other.field.zero:
            raise DomainError("composition requires zero constant term")
        if self.field.kind == "fp":
            out = _kernels.compose_mod(
                list(self.coeffs), list(other.coeffs), n, self.field.p
            )
            return PowerSeries(self.field, out, n)
        return self._compose_rational(other, n)

    def _compose_rational(self, other, n):
        if n == 0:
            return PowerSeries(self.field, [], 0)
        df = _common_denominator(self.coeffs)
        dg = _common_denominator(other.coeffs)
        fi = [int(c * df) for c in self.coeffs]
        gi = [int(c * dg) for c in other.coeffs]
        ord_g = n
        for i, c in enumerate(gi[:n]):
            if c:
                ord_g = i
                break
        # sum_j f_j g^j with g^j = G^j / dg^j, over the common
        # denominator df * dg^(n-1)
        acc = [0] * n
        acc[0] = fi[0] * dg ** (n - 1) if fi else 0
        power = [0] * n
        power[0] = 1
        for j in range(1, min(len(fi), n)):
            if j * ord_g >= n:
                break
            power = _int_convolve(power, gi, n)
            fj = fi[j]
            if fj:
                scale = fj * dg ** (n - 1 - j)
                for i in range(j, n):
                    if power[i]:
                        acc[i] += scale * power[i]
        d = df * dg ** (n - 1)
        return PowerSeries(self.field, [Fraction(c, d) for c in acc], n)

    # -------------------------------------------------------------- calculus

    def derive(self):
        """Formal derivative; output precision drops by one."""
        n = max(self.prec - 1, 0)
        mul_int = self.field.mul_int
        return PowerSeries(
            self.field,
            [mul_int(j, self.coeffs[j]) for j in range(1, self.prec)],
            n,
        )

    # ------------------------------------------------------------ rendering

    def _coeff_str(self, c):
        return str(c)

    def pretty(self, variable="T"):
        """Human form, e.g. ``1 + 2*T^2 + O(T^4)``."""
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == self.field.zero:
                continue
            if e == 0:
                terms.append(self._coeff_str(c))
            else:
                var = variable if e == 1 else f"{variable}^{e}"
                if c == self.field.one:
                    terms.append(var)
                else:
                    terms.append(f"{self._coeff_str(c)}*{var}")
        terms.append(f"O({variable}^{self.prec})")
        return " + ".join(terms)

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"PowerSeries({self.field!r}, {self.pretty()})"


class LaurentSeries:
    """A formal Laurent series: T**tail times a unit power series.

    The unit part has nonzero constant term.  The zero Laurent series is
    stored as ``unit is None`` with an order bound (order known >= bound).
    """

    __slots__ = ("field", "tail", "unit", "order_bound")

    def __init__(self, field, coeffs, tail=0, prec=None):
        """Series sum coeffs[i] * T**(tail + i), known to T**(tail + prec)."""
        coeffs = [field.coerce(c) for c in coeffs]
        if prec is None:
            prec = len(coeffs)
        if len(coeffs) < prec:
            coeffs.extend([field.zero] * (prec - len(coeffs)))
        coeffs = coeffs[:prec]
        shift = 0
        while shift < len(coeffs) and coeffs[shift] == field.zero:
            shift += 1
        object.__setattr__(self, "field", field)
        if shift == len(coeffs):
            object.__setattr__(self, "unit", None)
            object.__setattr__(self, "tail", 0)
            object.__setattr__(self, "order_bound", tail + prec)
        else:
            unit = PowerSeries(field, coeffs[shift:], prec - shift)
            object.__setattr__(self, "unit", unit)
            object.__setattr__(self, "tail", tail + shift)
            object.__setattr__(self, "order_bound", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    @classmethod
    def from_power_series(cls, ps, tail=0):
        return cls(ps.field, list(ps.coeffs), tail, ps.prec)

    @property
    def is_zero(self):
        return self.unit is None

    @property
    def prec_exponent(self):
        """Exponent e such that the series is known modulo T**e."""
        if self.is_zero:
            return self.order_bound
        return self.tail + self.unit.prec

    def _check(self, other):
        if not isinstance(other, LaurentSeries):
            raise DomainError("expected a LaurentSeries")
        if other.field != self.field:
            raise FieldMismatchError("mismatched coefficient fields")

    def order(self):
        """Exact tail valuation, or None when only a lower bound is known."""
        return None if self.is_zero else self.tail

    def norm(self, r):
        return RPower(r, self.order())

    def __add__(self, other):
        self._check(other)
        if self.is_zero and other.is_zero:
            return LaurentSeries(
                self.field, [], 0, min(self.order_bound, other.order_bound)
            )
        if self.is_zero:
            return other._truncated(min(self.order_bound, other.prec_exponent))
        if other.is_zero:
            return self._truncated(min(other.order_bound, self.prec_exponent))
        tail = min(self.tail, other.tail)
        end = min(self.prec_exponent, other.prec_exponent)
        add = self.field.add
        coeffs = []
        for e in range(tail, end):
            coeffs.append(add(self._coeff_at(e), other._coeff_at(e)))
        return LaurentSeries(self.field, coeffs, tail, max(end - tail, 0))

    def _coeff_at(self, e):
        if self.is_zero:
            return self.field.zero
        i = e - self.tail
        if 0 <= i < self.unit.prec:
            return self.unit.coeffs[i]
        return self.field.zero

    def _truncated(self, end):
        if self.is_zero:
            return LaurentSeries(self.field, [], 0, min(self.order_bound, end))
        keep = end - self.tail
        if keep <= 0:
            return LaurentSeries(self.field, [], 0, end)
        return LaurentSeries(
            self.field, list(self.unit.coeffs[:keep]), self.tail, keep
        )

    def __neg__(self):
        if self.is_zero:
            return self
        return LaurentSeries.from_power_series(-self.unit, self.tail)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        if self.is_zero or other.is_zero:
            bound_a = self.order_bound if self.is_zero else self.tail
            bound_b = other.order_bound if other.is_zero else other.tail
            return LaurentSeries(self.field, [], 0, bound_a + bound_b)
        prod = self.unit * other.unit
        return LaurentSeries.from_power_series(prod, self.tail + other.tail)

    def invert(self):
        """Multiplicative inverse; the tail valuation negates.

        Writes the series as c * T**n * (1 - T*b(T)) and inverts the last
        factor geometrically.
        """
        if self.is_zero:
            raise DivisionByZeroError("cannot invert a zero-to-order series")
        field = self.field
        c = self.unit.coeffs[0]
        cinv = field.inv(c)
        # normalised = 1 - a with a = -(unit/c - 1), a has zero constant term
        scaled = self.unit.scale(cinv)
        a = PowerSeries(
            field,
            [field.zero] + [field.neg(x) for x in scaled.coeffs[1:]],
            scaled.prec,
        )
        inv_unit = a.invert_one_minus().scale(cinv)
        return LaurentSeries.from_power_series(inv_unit, -self.tail)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.field != other.field:
            return False
        if self.is_zero or other.is_zero:
            return (
                self.is_zero
                and other.is_zero
                and self.order_bound == other.order_bound
            )
        return self.tail == other.tail and self.unit == other.unit

    def __hash__(self):
        return hash((self.field, self.tail, self.unit, self.order_bound))

    def pretty(self, variable="T"):
        """Human form, e.g. ``T^-1 + 1 + T + O(T^3)``."""
        if self.is_zero:
            return f"O({variable}^{self.order_bound})"
        terms = []
        for i, c in enumerate(self.unit.coeffs):
            if c == self.field.zero:
                continue
            e = self.tail + i
            if e == 0:
                terms.append(str(c))
            else:
                var = variable if e == 1 else f"{variable}^{e}"
                if c == self.field.one:
                    terms.append(var)
                else:
                    terms.append(f"{c}*{var}")
        terms.append(f"O({variable}^{self.prec_exponent})")
        return " + ".join(terms)

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"LaurentSeries({self.field!r}, {self.pretty()})"
