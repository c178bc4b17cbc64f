"""Small integer helpers used across the package."""

from functools import lru_cache

from .errors import DivisionByZeroError, DomainError

# Trial division stops here; larger primes are trusted input.
_TRIAL_DIVISION_LIMIT = 10**6


def int_valuation(n, p):
    """Largest e with p**e dividing n, for nonzero integer n."""
    if n == 0:
        raise ValueError("the zero integer has no finite valuation")
    e = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        e += 1
    return e


def inv_mod(a, m):
    """Inverse of a modulo m, via the extended Euclidean algorithm."""
    try:
        return pow(a, -1, m)
    except ValueError:
        raise DivisionByZeroError(f"{a} is not invertible modulo {m}") from None


def floor_log(n, base):
    """Largest e >= 0 with base**e <= n, for n >= 1."""
    if n < 1:
        raise ValueError("floor_log needs n >= 1")
    e = 0
    power = base
    while power <= n:
        power *= base
        e += 1
    return e


@lru_cache(maxsize=None)
def check_prime(p):
    """Reject p with a divisor below 10**6; larger p is trusted input."""
    if not isinstance(p, int) or p < 2:
        raise DomainError(f"modulus must be an integer >= 2, got {p!r}")
    if p in (2, 3):
        return p
    if p % 2 == 0 or p % 3 == 0:
        raise DomainError(f"{p} is not prime")
    d = 5
    while d * d <= p and d <= _TRIAL_DIVISION_LIMIT:
        if p % d == 0 or p % (d + 2) == 0:
            raise DomainError(f"{p} is not prime (divisible by small factor)")
        d += 6
    return p
