"""Truncated-precision exact arithmetic in the p-adic field.

A nonzero value is stored as ``p**v * m + O(p**(v + r))`` with an integer
valuation ``v``, a unit mantissa ``m`` (``0 < m < p**r``, not divisible by
p), and a relative precision ``r >= 1``.  A value indistinguishable from
zero stores only an absolute precision bound ``N`` and means
``0 + O(p**N)``: its valuation is known only to be ``>= N``.

Absolute values are never materialised as floating reals.  All size
comparisons go through integer valuations (larger valuation means smaller
number), so every arithmetic fact here is exact.

Precision rules per operation:

* add/sub: absolute precision ``min(N_x, N_y)``; the valuation of the sum
  is computed, never assumed, so full cancellation yields a
  zero-to-precision result rather than an error.
* mul: absolute precision ``min(v_x + N_y, v_y + N_x)``, i.e. relative
  precision ``min(r_x, r_y)``.
* invert: valuation negates, relative precision is preserved.

A construction-time cap (default 64 digits) bounds the relative precision
of freshly made values; since no operation ever increases relative
precision, the cap bounds the whole computation.  It is plain function
input, not ambient mutable state.
"""

from fractions import Fraction

from .errors import (
    DivisionByZeroError,
    DomainError,
    NotAnIntegerError,
    PrecisionError,
    PrimeMismatchError,
)
from .intmath import check_prime, int_valuation, inv_mod

DEFAULT_PRECISION_CAP = 64


class Padic:
    """A p-adic number known modulo a power of p."""

    __slots__ = ("p", "v", "unit", "rel")

    def __init__(self, p, v, unit, rel):
        """Build from already-normalised parts; prefer the classmethods."""
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "rel", rel)

    def __setattr__(self, name, value):
        raise AttributeError("Padic is immutable")

    # ---------------------------------------------------------- constructors

    @classmethod
    def zero(cls, p, abs_prec):
        """The value 0 + O(p**abs_prec)."""
        check_prime(p)
        return cls(p, abs_prec, 0, 0)

    @classmethod
    def _normalised(cls, p, v, raw, rel):
        """Value p**v * raw known mod p**(v + rel); raw may be non-unit."""
        n = v + rel
        raw %= p**rel
        if raw == 0:
            return cls(p, n, 0, 0)
        shift = int_valuation(raw, p)
        v += shift
        rel -= shift
        return cls(p, v, raw // p**shift, rel)

    @classmethod
    def from_int(cls, n, p, abs_prec=None, cap=DEFAULT_PRECISION_CAP):
        """The integer n to absolute precision abs_prec (default: v + cap)."""
        check_prime(p)
        if n == 0:
            return cls.zero(p, abs_prec if abs_prec is not None else cap)
        v = int_valuation(n, p)
        if abs_prec is None:
            abs_prec = v + cap
        rel = min(abs_prec - v, cap)
        if rel <= 0:
            return cls.zero(p, abs_prec)
        return cls._normalised(p, v, n // p**v, rel)

    @classmethod
    def from_rational(cls, a, b=1, p=None, abs_prec=None, cap=DEFAULT_PRECISION_CAP):
        """The rational a/b to absolute precision abs_prec.

        For b prime to p the unit part is a * b**-1 through a modular
        inverse; powers of p in a and b move into the valuation first.
        """
        if isinstance(a, Fraction):
            a, b = a.numerator, a.denominator * b
        if p is None:
            raise ValueError("prime p is required")
        check_prime(p)
        if b == 0:
            raise DivisionByZeroError("denominator is zero")
        if abs_prec is None:
            abs_prec = cap
        if a == 0:
            return cls.zero(p, abs_prec)
        va = int_valuation(a, p)
        vb = int_valuation(b, p)
        v = va - vb
        rel = min(abs_prec - v, cap)
        if rel <= 0:
            return cls.zero(p, abs_prec)
        ua = a // p**va
        ub = b // p**vb
        modulus = p**rel
        raw = ua * inv_mod(ub, modulus) % modulus
        return cls._normalised(p, v, raw, rel)

    # -------------------------------------------------------------- queries

    @property
    def is_zero(self):
        """True when the value is indistinguishable from 0 at its precision."""
        return self.unit == 0

    @property
    def abs_prec(self):
        """N such that the value is known modulo p**N."""
        return self.v + self.rel

    def valuation(self):
        """Exact valuation; zero-to-precision values raise PrecisionError."""
        if self.is_zero:
            raise PrecisionError(
                f"valuation known only to be >= {self.v} at this precision"
            )
        return self.v

    @property
    def valuation_bound(self):
        """Exact valuation for nonzero values, lower bound for zero."""
        return self.v

    def digits(self):
        """Little-endian base-p digits of the mantissa (empty for zero)."""
        if self.is_zero:
            return []
        out = []
        m = self.unit
        for _ in range(self.rel):
            m, d = divmod(m, self.p)
            out.append(d)
        return out

    def lift(self):
        """The canonical rational representative p**v * m."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.v

    def residue(self, j):
        """This value reduced modulo p**j, as a ResidueClass.

        Requires valuation >= 0 (a p-adic integer) and enough precision.
        """
        if j < 0:
            raise DomainError("residue level must be nonnegative")
        if self.v < 0:
            raise NotAnIntegerError(
                f"valuation {self.v} < 0: not a p-adic integer"
            )
        if self.abs_prec < j:
            raise PrecisionError(
                f"known only mod p^{self.abs_prec}, cannot reduce mod p^{j}"
            )
        if self.is_zero:
            return ResidueClass(self.p, j, 0)
        return ResidueClass(self.p, j, self.unit * self.p**self.v % self.p**j)

    def truncate(self, abs_prec):
        """Forget information: the same value to a lower absolute precision."""
        if abs_prec > self.abs_prec:
            raise PrecisionError(
                f"cannot raise precision from {self.abs_prec} to {abs_prec}"
            )
        if self.is_zero or self.v >= abs_prec:
            return Padic.zero(self.p, abs_prec)
        return Padic._normalised(self.p, self.v, self.unit, abs_prec - self.v)

    # ----------------------------------------------------------- arithmetic

    def _coerce(self, other):
        if isinstance(other, Padic):
            if other.p != self.p:
                raise PrimeMismatchError(
                    f"cannot combine {self.p}-adic and {other.p}-adic values"
                )
            return other
        if isinstance(other, int):
            return Padic.from_int(other, self.p)
        if isinstance(other, Fraction):
            return Padic.from_rational(other, 1, self.p)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.abs_prec, other.abs_prec)
        if self.is_zero and other.is_zero:
            return Padic.zero(self.p, n)
        if self.is_zero:
            return other.truncate(n)
        if other.is_zero:
            return self.truncate(n)
        v = min(self.v, other.v)
        if n <= v:
            return Padic.zero(self.p, n)
        s = self.unit * self.p ** (self.v - v) + other.unit * self.p ** (
            other.v - v
        )
        return Padic._normalised(self.p, v, s, n - v)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return Padic._normalised(self.p, self.v, -self.unit, self.rel)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            # v(xy) >= bound(x) + bound(y)
            return Padic.zero(self.p, self.v + other.v)
        rel = min(self.rel, other.rel)
        return Padic._normalised(
            self.p, self.v + other.v, self.unit * other.unit, rel
        )

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse; relative precision is preserved."""
        if self.is_zero:
            raise DivisionByZeroError(
                f"cannot invert 0 + O({self.p}^{self.abs_prec})"
            )
        return Padic._normalised(
            self.p, -self.v, inv_mod(self.unit, self.p**self.rel), self.rel
        )

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.invert()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.invert() ** (-e)
        result = Padic.from_int(1, self.p, cap=max(self.rel, 1))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ------------------------------------------------------------- equality

    def __eq__(self, other):
        """Representation equality: same prime, parts, and precision.

        Use ``(x - y).is_zero`` to test indistinguishability at the shared
        precision instead.
        """
        if not isinstance(other, Padic):
            return NotImplemented
        return (
            self.p == other.p
            and self.v == other.v
            and self.unit == other.unit
            and self.rel == other.rel
        )

    def __hash__(self):
        return hash((self.p, self.v, self.unit, self.rel))

    # ------------------------------------------------------------ rendering

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"Padic({self.compact()})"

    def pretty(self):
        """Human form, e.g. ``3 + 1*7 + 2*7^2 + O(7^3)``."""
        if self.is_zero:
            return f"O({self.p}^{self.abs_prec})"
        terms = []
        for i, d in enumerate(self.digits()):
            if d == 0:
                continue
            e = self.v + i
            if e == 0:
                terms.append(str(d))
            elif e == 1:
                terms.append(f"{d}*{self.p}")
            else:
                terms.append(f"{d}*{self.p}^{e}")
        terms.append(f"O({self.p}^{self.abs_prec})")
        return " + ".join(terms)

    def compact(self):
        """Machine form, e.g. ``7^0*[3,1,2]+O(7^3)``."""
        if self.is_zero:
            return f"O({self.p}^{self.abs_prec})"
        digitstr = ",".join(str(d) for d in self.digits())
        return f"{self.p}^{self.v}*[{digitstr}]+O({self.p}^{self.abs_prec})"

    def to_json_dict(self):
        if self.is_zero:
            return {"p": self.p, "digits": [], "abs_prec": self.abs_prec}
        return {
            "p": self.p,
            "valuation": self.v,
            "digits": self.digits(),
            "abs_prec": self.abs_prec,
        }

    @classmethod
    def from_json_dict(cls, data):
        p = data["p"]
        digits = data["digits"]
        abs_prec = data["abs_prec"]
        if not digits:
            return cls.zero(p, abs_prec)
        v = data["valuation"]
        m = 0
        for d in reversed(digits):
            m = m * p + d
        return cls._normalised(p, v, m, abs_prec - v)


class ResidueClass:
    """A residue c modulo p**level, the image of a p-adic integer."""

    __slots__ = ("p", "level", "value")

    def __init__(self, p, level, value):
        check_prime(p)
        if level < 0:
            raise DomainError("level must be nonnegative")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "value", value % p**level if level else 0)

    def __setattr__(self, name, value):
        raise AttributeError("ResidueClass is immutable")

    def _check(self, other):
        if not isinstance(other, ResidueClass):
            raise DomainError("expected a ResidueClass")
        if other.p != self.p or other.level != self.level:
            raise PrimeMismatchError("mismatched residue rings")

    def __add__(self, other):
        self._check(other)
        return ResidueClass(self.p, self.level, self.value + other.value)

    def __sub__(self, other):
        self._check(other)
        return ResidueClass(self.p, self.level, self.value - other.value)

    def __mul__(self, other):
        self._check(other)
        return ResidueClass(self.p, self.level, self.value * other.value)

    def __eq__(self, other):
        if not isinstance(other, ResidueClass):
            return NotImplemented
        return (
            self.p == other.p
            and self.level == other.level
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.p, self.level, self.value))

    def __repr__(self):
        return f"ResidueClass({self.value} mod {self.p}^{self.level})"
